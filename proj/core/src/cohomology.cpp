#include "crys/cohomology.hpp"

namespace crys {

CosetVector CosetVector::reduce(const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = fractional_part(v[i]);
  return CosetVector{std::move(r)};
}

CosetVector coset_add(const CosetVector& a, const CosetVector& b) {
  return CosetVector::reduce(add(a.coords, b.coords));
}

CosetVector coset_sub(const CosetVector& a, const CosetVector& b) {
  return CosetVector::reduce(sub(a.coords, b.coords));
}

CosetVector coset_scale(const CosetVector& a, const Int& k) {
  return CosetVector::reduce(scale(a.coords, Rat(k)));
}

CosetVector coset_apply(const IntMatrix& g, const CosetVector& a) {
  return CosetVector::reduce(g * a.coords);
}

Cocycle Cocycle::zero(LatticePtr L) {
  Cocycle T{L, {}};
  for (int i = 0; i < L->group().num_generators(); ++i)
    T.values.push_back(CosetVector{RatVec(L->rank(), Rat(0))});
  return T;
}

static void check_shape(const Cocycle& T) {
  if (!T.lattice) throw std::invalid_argument("cocycle: missing lattice");
  if (int(T.values.size()) != T.lattice->group().num_generators())
    throw std::invalid_argument("cocycle: one value per group generator required");
  for (const auto& v : T.values)
    if (int(v.coords.size()) != T.lattice->rank())
      throw std::invalid_argument("cocycle: value dimension mismatch");
}

Cocycle cocycle_sub(const Cocycle& a, const Cocycle& b) {
  check_shape(a);
  check_shape(b);
  if (!(*a.lattice == *b.lattice)) throw std::invalid_argument("cocycle_sub: lattice mismatch");
  Cocycle r{a.lattice, {}};
  for (size_t i = 0; i < a.values.size(); ++i)
    r.values.push_back(coset_sub(a.values[i], b.values[i]));
  return r;
}

Cocycle cocycle_scale(const Cocycle& a, const Int& k) {
  check_shape(a);
  Cocycle r{a.lattice, {}};
  for (const auto& v : a.values) r.values.push_back(coset_scale(v, k));
  return r;
}

bool validate_cocycle(const Cocycle& T) {
  check_shape(T);
  const GLattice& L = *T.lattice;
  const PGroup& G = L.group();
  if (G.kind() == GroupKind::Cyclic) {
    return is_integral(L.norm_matrix(element(G, 1)) * T.values[0].coords);
  }
  GroupElement a = element(G, 1, 0), b = element(G, 0, 1);
  if (!is_integral(L.norm_matrix(a) * T.values[0].coords)) return false;
  if (!is_integral(L.norm_matrix(b) * T.values[1].coords)) return false;
  const IntMatrix I = IntMatrix::identity(L.rank());
  RatVec lhs = (L.action_of(a) - I) * T.values[1].coords;
  RatVec rhs = (L.action_of(b) - I) * T.values[0].coords;
  return is_integral(sub(lhs, rhs));
}

CosetVector evaluate(const Cocycle& T, const GroupElement& g) {
  check_shape(T);
  if (!validate_cocycle(T)) throw std::invalid_argument("evaluate: invalid cocycle");
  const GLattice& L = *T.lattice;
  const PGroup& G = L.group();
  auto partial_norm = [&](const GroupElement& gen, long k) {
    // 1 + gen + ... + gen^{k-1}
    IntMatrix A = L.action_of(gen);
    IntMatrix S = IntMatrix::zero(L.rank(), L.rank());
    IntMatrix P = IntMatrix::identity(L.rank());
    for (long t = 0; t < k; ++t) {
      S = S + P;
      P = P * A;
    }
    return S;
  };
  GroupElement a = element(G, 1, 0);
  if (G.kind() == GroupKind::Cyclic)
    return CosetVector::reduce(partial_norm(a, g.i) * T.values[0].coords);
  GroupElement b = element(G, 0, 1);
  // T(a^i b^j) = b^j T(a^i) + T(b^j)
  RatVec ta = partial_norm(a, g.i) * T.values[0].coords;
  RatVec tb = partial_norm(b, g.j) * T.values[1].coords;
  return CosetVector::reduce(add(L.action_of(b).pow(g.j) * ta, tb));
}

// Stacked blocks action(g_i) - I, one per generator.
static IntMatrix coboundary_map(const GLattice& L) {
  const IntMatrix I = IntMatrix::identity(L.rank());
  IntMatrix S(0, L.rank());
  for (const auto& A : L.action()) S = S.stacked(A - I);
  return S;
}

std::optional<RatVec> is_coboundary(const Cocycle& T) {
  check_shape(T);
  if (!validate_cocycle(T)) throw std::invalid_argument("is_coboundary: invalid cocycle");
  const GLattice& L = *T.lattice;
  const int m = L.rank();
  const int r = L.group().num_generators();
  RatVec t;
  for (const auto& v : T.values) t.insert(t.end(), v.coords.begin(), v.coords.end());
  IntMatrix S = coboundary_map(L);
  auto w = member_subspace_plus_lattice(t, S, IntMatrix::identity(r * m));
  if (!w) return std::nullopt;
  auto y = solve_rational(S, w->x);
  if (!y) throw std::logic_error("is_coboundary: witness outside subspace");
  return *y;
}

bool cohomologous(const Cocycle& T1, const Cocycle& T2) {
  return is_coboundary(cocycle_sub(T1, T2)).has_value();
}

Cocycle restrict_cocycle(const Cocycle& T, const GroupElement& h) {
  check_shape(T);
  const GLattice& L = *T.lattice;
  if (is_identity(L.group(), h))
    throw std::invalid_argument("restrict_cocycle: subgroup generator must be nontrivial");
  auto R = std::make_shared<GLattice>(restriction(L, h));
  Cocycle out{R, {evaluate(T, h)}};
  return out;
}

Cocycle push_cocycle(const Cocycle& T, const GroupAutomorphism& eps, const IntMatrix& tau) {
  check_shape(T);
  const GLattice& L = *T.lattice;
  const PGroup& G = L.group();
  if (eps.group != G) throw std::invalid_argument("push_cocycle: automorphism group mismatch");
  std::vector<GroupElement> gens{element(G, 1, 0)};
  if (G.kind() == GroupKind::Klein) gens.push_back(element(G, 0, 1));
  for (const auto& g : gens)
    if (L.action_of(eps.apply(g)) * tau != tau * L.action_of(g))
      throw std::invalid_argument("push_cocycle: tau does not intertwine the twist");
  GroupAutomorphism inv = eps.inverse();
  Cocycle out{T.lattice, {}};
  for (const auto& g : gens)
    out.values.push_back(coset_apply(tau, evaluate(T, inv.apply(g))));
  return out;
}

// Integer condition matrix on value tuples u (the cocycle has values u/d):
// u must satisfy C u = 0 mod d.
static IntMatrix cocycle_conditions(const GLattice& L) {
  const PGroup& G = L.group();
  const int m = L.rank();
  GroupElement a = element(G, 1, 0);
  if (G.kind() == GroupKind::Cyclic) return L.norm_matrix(a);
  GroupElement b = element(G, 0, 1);
  const IntMatrix Z = IntMatrix::zero(m, m);
  const IntMatrix I = IntMatrix::identity(m);
  IntMatrix top = L.norm_matrix(a).beside(Z);
  IntMatrix mid = Z.beside(L.norm_matrix(b));
  IntMatrix bot = (-(L.action_of(b) - I)).beside(L.action_of(a) - I);
  return top.stacked(mid).stacked(bot);
}

// Rows spanning the projection of ker(M) onto the first n coordinates.
static IntMatrix projected_kernel(const IntMatrix& M, int n) {
  IntMatrix K = integer_kernel(M);
  IntMatrix P(K.rows(), n);
  for (int i = 0; i < K.rows(); ++i)
    for (int j = 0; j < n; ++j) P.at(i, j) = K.at(i, j);
  return hnf_basis(P);
}

CohomologyResult h1(LatticePtr Lp) {
  const GLattice& L = *Lp;
  const PGroup& G = L.group();
  const int m = L.rank();
  const int r = G.num_generators();
  const int rm = r * m;
  const Int d = G.order();

  CohomologyResult res;
  res.lattice_ = Lp;
  if (rm == 0) {
    res.z_basis_ = IntMatrix(0, 0);
    res.v_ = IntMatrix(0, 0);
    return res;
  }

  // Z1: value tuples satisfying the cocycle congruences mod d
  IntMatrix C = cocycle_conditions(L);
  IntMatrix Z = projected_kernel(C.beside(IntMatrix::identity(C.rows()) * d), rm);
  if (Z.rows() != rm) throw std::logic_error("h1: cocycle lattice not full rank");

  // B1: coboundary tuples; witness denominators are bounded by D = d*c with
  // c the last nonzero invariant factor of the stacked (g-1) map
  IntMatrix S = coboundary_map(L);
  Int c = 1;
  {
    auto snf = smith_normal_form(S);
    for (int i = 0; i < std::min(snf.D.rows(), snf.D.cols()); ++i)
      if (snf.D.at(i, i) != 0) c = snf.D.at(i, i);
  }
  Int D = d * c;
  IntMatrix M = (IntMatrix::identity(rm) * D)
                    .beside(-(S * d))
                    .beside(IntMatrix::identity(rm) * (-d * D));
  IntMatrix B = projected_kernel(M, rm);
  if (B.rows() != rm) throw std::logic_error("h1: coboundary lattice not full rank");

  // quotient Z1/B1 via SNF of B in Z coordinates
  IntMatrix X(rm, rm);
  for (int i = 0; i < rm; ++i) {
    RatVec v(rm);
    for (int j = 0; j < rm; ++j) v[j] = Rat(B.at(i, j));
    auto coords = lattice_coords(Z, v);
    if (!coords) throw std::logic_error("h1: coboundary outside cocycle lattice");
    for (int j = 0; j < rm; ++j) X.at(i, j) = (*coords)[j];
  }
  auto snf = smith_normal_form(X);
  res.z_basis_ = Z;
  res.v_ = snf.V;
  IntMatrix Vinv = unimodular_inverse(snf.V);
  for (int i = 0; i < rm; ++i) {
    Int di = snf.D.at(i, i);
    res.factors_.push_back(di);
    if (di <= 1) continue;
    res.group_.invariant_factors.push_back(di);
    // representative: row i of V^{-1} in Z coordinates, values u/d
    Cocycle rep{Lp, {}};
    for (int g = 0; g < r; ++g) {
      RatVec val(m);
      for (int j = 0; j < m; ++j) {
        Rat u(0);
        for (int k = 0; k < rm; ++k) u += Rat(Vinv.at(i, k)) * Rat(Z.at(k, g * m + j));
        val[j] = u / Rat(d);
      }
      rep.values.push_back(CosetVector::reduce(val));
    }
    if (!validate_cocycle(rep)) throw std::logic_error("h1: representative fails validation");
    // cross-check against the exact, denominator-free coboundary test
    if (is_coboundary(rep)) throw std::logic_error("h1: representative is a coboundary");
    if (!is_coboundary(cocycle_scale(rep, di)))
      throw std::logic_error("h1: representative order mismatch");
    res.reps_.push_back(std::move(rep));
  }
  return res;
}

std::vector<Int> CohomologyResult::class_of(const Cocycle& T) const {
  check_shape(T);
  if (!(*T.lattice == *lattice_)) throw std::invalid_argument("class_of: lattice mismatch");
  if (!validate_cocycle(T)) throw std::invalid_argument("class_of: invalid cocycle");
  const int m = lattice_->rank();
  const int r = lattice_->group().num_generators();
  const Int d = lattice_->group().order();
  RatVec u(r * m);
  for (int g = 0; g < r; ++g)
    for (int j = 0; j < m; ++j) u[g * m + j] = T.values[g].coords[j] * Rat(d);
  if (!is_integral(u))
    throw std::invalid_argument("class_of: value denominators must divide the group order");
  auto y = lattice_coords(z_basis_, u);
  if (!y) throw std::logic_error("class_of: tuple outside the cocycle lattice");
  std::vector<Int> out;
  for (int i = 0; i < int(factors_.size()); ++i) {
    if (factors_[i] <= 1) continue;
    Int w = 0;
    for (int k = 0; k < int(y->size()); ++k) w += (*y)[k] * v_.at(k, i);
    mpz_fdiv_r(w.get_mpz_t(), w.get_mpz_t(), factors_[i].get_mpz_t());
    out.push_back(w);
  }
  return out;
}

Cocycle CohomologyResult::rep_for(const std::vector<Int>& components) const {
  if (components.size() != reps_.size())
    throw std::invalid_argument("rep_for: component count mismatch");
  Cocycle out = Cocycle::zero(lattice_);
  for (size_t i = 0; i < reps_.size(); ++i) {
    Cocycle part = cocycle_scale(reps_[i], components[i]);
    for (size_t g = 0; g < out.values.size(); ++g)
      out.values[g] = coset_add(out.values[g], part.values[g]);
  }
  return out;
}

std::vector<std::vector<Int>> CohomologyResult::all_classes() const {
  std::vector<std::vector<Int>> out{{}};
  for (const auto& d : group_.invariant_factors) {
    std::vector<std::vector<Int>> next;
    for (const auto& base : out)
      for (Int k = 0; k < d; ++k) {
        auto t = base;
        t.push_back(k);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace crys
