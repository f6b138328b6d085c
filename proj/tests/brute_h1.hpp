#pragma once
// Brute-force H1 oracle for small lattices, shared by the unit and acceptance
// suites.  Works entirely with integer value tuples u, the cocycle being u/d.

#include "crys/cohomology.hpp"

#include <set>
#include <vector>

namespace crys::oracle {

struct BruteH1 {
  long d;
  int rm;
  std::set<std::vector<long>> z1;        // all valid tuples mod d
  std::set<std::vector<long>> b1;        // coboundary tuples mod d
};

inline std::vector<long> mat_apply_mod(const IntMatrix& M, const std::vector<long>& u, long d,
                                       int off) {
  std::vector<long> r(M.rows());
  for (int i = 0; i < M.rows(); ++i) {
    long acc = 0;
    for (int j = 0; j < M.cols(); ++j)
      acc += long(mpz_class(M.at(i, j) % d).get_si()) * u[off + j];
    r[i] = ((acc % d) + d) % d;
  }
  return r;
}

inline BruteH1 brute_h1(const GLattice& L) {
  const PGroup& G = L.group();
  const long d = G.order();
  const int m = L.rank();
  const int r = G.num_generators();
  BruteH1 out{d, r * m, {}, {}};

  // condition matrices, written out directly from the definitions
  GroupElement a = element(G, 1, 0);
  IntMatrix Na = L.norm_matrix(a);
  std::vector<long> u(out.rm, 0);
  while (true) {
    bool ok = mat_apply_mod(Na, u, d, 0) == std::vector<long>(m, 0);
    if (ok && G.kind() == GroupKind::Klein) {
      GroupElement b = element(G, 0, 1);
      ok = mat_apply_mod(L.norm_matrix(b), u, d, m) == std::vector<long>(m, 0);
      if (ok) {
        IntMatrix I = IntMatrix::identity(m);
        auto lhs = mat_apply_mod(L.action_of(a) - I, u, d, m);
        auto rhs = mat_apply_mod(L.action_of(b) - I, u, d, 0);
        ok = lhs == rhs;
      }
    }
    if (ok) out.z1.insert(u);
    int k = 0;
    while (k < out.rm && u[k] == d - 1) u[k++] = 0;
    if (k == out.rm) break;
    ++u[k];
  }

  // coboundaries: subgroup generated by images of (1/N) e_j, N growing until
  // the intersection with denominator-d tuples stabilizes
  IntMatrix S(0, m);
  for (const auto& A : L.action()) S = S.stacked(A - IntMatrix::identity(m));
  std::set<std::vector<long>> prev;
  bool first = true;
  const long p = G.p();  // witness denominators are p-powers
  for (long N = d; N <= d * d * d * d; N *= p) {
    // subgroup of (1/N)Z^{rm}/Z^{rm} generated by the m columns of S/N
    std::set<std::vector<long>> sub;  // elements scaled by N
    sub.insert(std::vector<long>(out.rm, 0));
    std::vector<std::vector<long>> gens;
    for (int j = 0; j < m; ++j) {
      std::vector<long> g(out.rm);
      for (int i = 0; i < out.rm; ++i)
        g[i] = ((long(mpz_class(S.at(i, j) % N).get_si()) % N) + N) % N;
      gens.push_back(g);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<long>> cur(sub.begin(), sub.end());
      for (const auto& x : cur)
        for (const auto& g : gens) {
          std::vector<long> y(out.rm);
          for (int i = 0; i < out.rm; ++i) y[i] = (x[i] + g[i]) % N;
          if (sub.insert(y).second) grew = true;
        }
    }
    std::set<std::vector<long>> capture;
    for (const auto& x : sub) {
      bool denom_d = true;
      std::vector<long> scaled(out.rm);
      for (int i = 0; i < out.rm; ++i) {
        if ((x[i] * d) % N != 0) { denom_d = false; break; }
        scaled[i] = (x[i] * d) / N;
      }
      if (denom_d) capture.insert(scaled);
    }
    if (!first && capture == prev) break;
    first = false;
    prev = capture;
  }
  out.b1 = prev;
  return out;
}

inline Cocycle tuple_to_cocycle(LatticePtr L, const std::vector<long>& u, long d) {
  const int m = L->rank();
  Cocycle T{L, {}};
  for (int g = 0; g < L->group().num_generators(); ++g) {
    RatVec v(m);
    for (int j = 0; j < m; ++j) v[j] = make_rat(u[g * m + j], d);
    T.values.push_back(CosetVector::reduce(v));
  }
  return T;
}

}  // namespace crys::oracle
