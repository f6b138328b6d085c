#include "doctest.h"
#include "oracles.hpp"

#include "crys/groupcore.hpp"

#include <random>

using namespace crys;

TEST_CASE("element arithmetic") {
  auto C5 = PGroup::cyclic(5, 1);
  CHECK(is_identity(C5, multiply_elements(C5, element(C5, 1), element(C5, 4))));
  auto g = element(C5, 3);
  CHECK(multiply_elements(C5, identity_element(), g) == g);

  auto V = PGroup::klein(2);
  CHECK(multiply_elements(V, element(V, 1, 0), element(V, 0, 1)) == element(V, 1, 1));

  CHECK(element_order(C5, element(C5, 2)) == 5);
  auto C9 = PGroup::cyclic(3, 2);
  CHECK(element_order(C9, element(C9, 3)) == 3);
  CHECK(element_order(C9, element(C9, 1)) == 9);
  CHECK(inverse_element(C9, element(C9, 4)) == element(C9, 5));
}

TEST_CASE("phi elements") {
  auto C4 = PGroup::cyclic(2, 2);
  auto phi = phi_element(C4, element(C4, 1));
  CHECK(phi == ring_unit(C4) + ring_element(C4, element(C4, 1)));

  auto C9 = PGroup::cyclic(3, 2);
  auto phi9 = phi_element(C9, element(C9, 1));
  GroupRingElement expect(C9);
  for (long k = 0; k < 3; ++k) expect.coeff(element(C9, k)) = 1;
  CHECK(phi9 == expect);

  CHECK_THROWS(phi_element(C9, identity_element()));

  // telescoping: Phi(a) (a - 1) = a^p - 1
  for (long p : {2L, 3L, 5L}) {
    auto G = PGroup::cyclic(p, 2);
    auto a = ring_element(G, element(G, 1));
    auto lhs = phi_element(G, element(G, 1)) * (a - ring_unit(G));
    auto rhs = ring_element(G, element(G, p)) - ring_unit(G);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("norm elements") {
  auto C4 = PGroup::cyclic(2, 2);
  auto n1 = norm_element(C4, identity_element());
  CHECK(n1 == ring_unit(C4));

  auto C2 = PGroup::cyclic(2, 1);
  CHECK(norm_element(C2, element(C2, 1)) ==
        ring_unit(C2) + ring_element(C2, element(C2, 1)));

  for (const auto& g : all_elements(C4)) {
    auto diff = ring_element(C4, g) - ring_unit(C4);
    CHECK((diff * norm_element(C4, g)).is_zero());
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(PGroup::cyclic(2, 2)).size() == 2);
  CHECK(automorphisms(PGroup::klein(2)).size() == 6);
  CHECK(automorphisms(PGroup::cyclic(3, 2)).size() == 6);
  CHECK(automorphisms(PGroup::klein(3)).size() == 48);

  for (const auto& G : {PGroup::cyclic(3, 2), PGroup::klein(2)}) {
    auto all = automorphisms(G);
    for (const auto& e1 : all) {
      // order preservation
      for (const auto& g : all_elements(G))
        CHECK(element_order(G, e1.apply(g)) == element_order(G, g));
      // closure under composition
      for (const auto& e2 : all) {
        auto c = e1.compose(e2);
        CHECK(std::find(all.begin(), all.end(), c) != all.end());
      }
      // inverse works
      CHECK(e1.compose(e1.inverse()).is_identity());
    }
    // the generator set generates everything
    auto gens = automorphism_generators(G);
    std::vector<GroupAutomorphism> closure{all[0].compose(all[0].inverse())};
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t i = 0; i < closure.size(); ++i)
        for (const auto& g : gens) {
          auto c = closure[i].compose(g);
          if (std::find(closure.begin(), closure.end(), c) == closure.end()) {
            closure.push_back(c);
            grew = true;
          }
        }
    }
    CHECK(closure.size() == all.size());
  }
}

TEST_CASE("phi minus (a-1)^(p-1) is divisible by p") {
  for (long p : {2L, 3L, 5L, 7L}) {
    auto G = PGroup::cyclic(p, 1);
    auto a = ring_element(G, element(G, 1));
    auto diff = phi_element(G, element(G, 1)) - (a - ring_unit(G)).pow(p - 1);
    GroupRingElement omega(G);
    for (const auto& g : all_elements(G)) {
      CHECK(diff.coeff(g) % p == 0);
      omega.coeff(g) = diff.coeff(g) / p;
    }
    CHECK(omega * Int(p) == diff);
  }
}

TEST_CASE("(a-1)^p Phi(a^p) is p (a-1) theta Phi(a^p) with theta a unit mod p") {
  std::mt19937_64 rng(2718);
  for (long p : {2L, 3L, 5L}) {
    auto G = PGroup::cyclic(p, 2);
    auto a = ring_element(G, element(G, 1));
    auto phiap = phi_element(G, element(G, p));
    auto lhs = (a - ring_unit(G)).pow(p) * phiap;
    auto mult = ((a - ring_unit(G)) * phiap * Int(p)).multiplication_matrix();
    // integral particular solution via SNF, then search the kernel coset for a
    // theta invertible modulo p
    auto snf = smith_normal_form(mult);
    const int n = int(G.order());
    std::vector<Int> ub(n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ub[i] += snf.U.at(i, j) * lhs.coeffs()[j];
    std::vector<Int> y(n, Int(0));
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      Int di = snf.D.at(i, i);
      if (di == 0) {
        if (ub[i] != 0) ok = false;
      } else {
        if (ub[i] % di != 0) ok = false;
        else y[i] = ub[i] / di;
      }
    }
    REQUIRE(ok);
    std::vector<Int> x0(n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x0[i] += snf.V.at(i, j) * y[j];
    auto K = integer_kernel(mult);
    std::uniform_int_distribution<long> coef(0, p - 1);
    bool unit_found = false;
    for (int trial = 0; trial < 400 && !unit_found; ++trial) {
      auto x = x0;
      if (trial > 0)
        for (int r = 0; r < K.rows(); ++r) {
          long c = coef(rng);
          for (int i = 0; i < n; ++i) x[i] += Int(c) * K.at(r, i);
        }
      GroupRingElement theta(G, x);
      // verify the identity exactly, then invertibility mod p
      if (!((a - ring_unit(G)) * theta * phiap * Int(p) == lhs)) continue;
      if (det_mod_p(theta.multiplication_matrix(), p) != 0) unit_found = true;
    }
    CHECK(unit_found);
  }
}
