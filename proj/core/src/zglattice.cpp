#include "crys/zglattice.hpp"

#include <cmath>
#include <random>

namespace crys {

namespace {

void check_group_relations(const PGroup& G, const std::vector<IntMatrix>& action) {
  if (size_t(G.num_generators()) != action.size())
    throw std::invalid_argument("GLattice: wrong number of action matrices");
  const int m = action[0].rows();
  for (const auto& M : action)
    if (M.rows() != m || M.cols() != m)
      throw std::invalid_argument("GLattice: action matrices must be square of equal size");
  if (m == 0) return;
  if (G.kind() == GroupKind::Cyclic) {
    if (!action[0].pow(G.order()).is_identity())
      throw std::invalid_argument("GLattice: a^{p^s} != 1");
  } else {
    if (!action[0].pow(G.p()).is_identity() || !action[1].pow(G.p()).is_identity())
      throw std::invalid_argument("GLattice: generator order relation violated");
    if (action[0] * action[1] != action[1] * action[0])
      throw std::invalid_argument("GLattice: generators do not commute");
  }
  for (const auto& M : action) {
    Int d = M.det();
    if (d % G.p() == 0) throw std::invalid_argument("GLattice: action determinant divisible by p");
  }
}

}  // namespace

GLattice::GLattice(PGroup group, std::vector<IntMatrix> action,
                   std::optional<AmbientEmbedding> embedding)
    : group_(group), action_(std::move(action)), embedding_(std::move(embedding)) {
  check_group_relations(group_, action_);
  rank_ = action_[0].rows();
  if (embedding_) {
    if (embedding_->basis.rows() != rank_ || embedding_->basis.cols() != embedding_->ambient_rank)
      throw std::invalid_argument("GLattice: embedding basis shape mismatch");
  }
}

IntMatrix GLattice::action_of(const GroupElement& g) const {
  if (group_.kind() == GroupKind::Cyclic) return action_[0].pow(g.i);
  return action_[0].pow(g.i) * action_[1].pow(g.j);
}

IntMatrix GLattice::norm_matrix(const GroupElement& g) const {
  const long n = element_order(group_, g);
  IntMatrix A = action_of(g);
  IntMatrix S = IntMatrix::identity(rank_);
  IntMatrix P = IntMatrix::identity(rank_);
  for (long k = 1; k < n; ++k) {
    P = P * A;
    S = S + P;
  }
  return S;
}

RatVec GLattice::ambient_to_coords(const RatVec& ambient) const {
  if (!embedding_) throw std::invalid_argument("ambient_to_coords: lattice has no embedding");
  auto y = solve_rational(embedding_->basis.transpose(), ambient);
  if (!y) throw std::invalid_argument("ambient_to_coords: vector outside the lattice span");
  return *y;
}

GLattice regular_lattice(const PGroup& G) {
  const long n = G.order();
  std::vector<IntMatrix> action;
  std::vector<GroupElement> gens{element(G, 1, 0)};
  if (G.kind() == GroupKind::Klein) gens.push_back(element(G, 0, 1));
  for (const auto& g : gens) {
    IntMatrix M{int(n), int(n)};
    for (long k = 0; k < n; ++k) {
      GroupElement img = multiply_elements(G, g, element_at(G, k));
      M.at(int(element_index(G, img)), int(k)) = 1;
    }
    action.push_back(std::move(M));
  }
  return GLattice(G, std::move(action));
}

GLattice free_module(const PGroup& G, int copies) {
  GLattice reg = regular_lattice(G);
  const int n = reg.rank();
  std::vector<IntMatrix> action;
  for (const auto& A : reg.action()) {
    IntMatrix M(n * copies, n * copies);
    for (int c = 0; c < copies; ++c)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(c * n + i, c * n + j) = A.at(i, j);
    action.push_back(std::move(M));
  }
  return GLattice(G, std::move(action));
}

GLattice sublattice_span(const GLattice& ambient, const std::vector<std::vector<Int>>& generators) {
  const int N = ambient.rank();
  IntMatrix rows(0, N);
  for (const auto& g : generators) {
    if (int(g.size()) != N) throw std::invalid_argument("sublattice_span: generator dimension mismatch");
    IntMatrix r(1, N);
    for (int j = 0; j < N; ++j) r.at(0, j) = g[j];
    rows = rows.stacked(r);
  }
  IntMatrix basis = hnf_basis(rows);
  // close under the action
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& M : ambient.action()) {
      IntMatrix imgs(basis.rows(), N);
      for (int i = 0; i < basis.rows(); ++i) {
        auto v = M * basis.row_vec(i);
        imgs.set_row(i, v);
      }
      IntMatrix bigger = hnf_basis(basis.stacked(imgs));
      if (bigger != basis) {
        basis = bigger;
        grew = true;
      }
    }
  }
  const int r = basis.rows();
  std::vector<IntMatrix> induced;
  for (const auto& M : ambient.action()) {
    IntMatrix C(r, r);
    for (int i = 0; i < r; ++i) {
      auto w = M * basis.row_vec(i);
      RatVec wq(N);
      for (int j = 0; j < N; ++j) wq[j] = Rat(w[j]);
      auto c = lattice_coords(basis, wq);
      if (!c) throw std::logic_error("sublattice_span: action does not preserve the span");
      for (int j = 0; j < r; ++j) C.at(i, j) = (*c)[j];
    }
    induced.push_back(C.transpose());
  }
  AmbientEmbedding emb{N, basis, ambient.action()};
  return GLattice(ambient.group(), std::move(induced), std::move(emb));
}

GLattice restriction(const GLattice& L, const GroupElement& h) {
  if (is_identity(L.group(), h)) throw std::invalid_argument("restriction: trivial subgroup");
  const long n = element_order(L.group(), h);
  long s = 0;
  for (long m = n; m > 1; m /= L.group().p()) ++s;
  PGroup H = PGroup::cyclic(L.group().p(), s);
  return GLattice(H, {L.action_of(h)});
}

GLattice contragredient(const GLattice& L) {
  std::vector<IntMatrix> action;
  std::vector<GroupElement> gens{element(L.group(), 1, 0)};
  if (L.group().kind() == GroupKind::Klein) gens.push_back(element(L.group(), 0, 1));
  for (const auto& g : gens)
    action.push_back(L.action_of(inverse_element(L.group(), g)).transpose());
  return GLattice(L.group(), std::move(action));
}

GLattice twist(const GLattice& L, const GroupAutomorphism& eps) {
  if (eps.group != L.group()) throw std::invalid_argument("twist: automorphism of the wrong group");
  std::vector<IntMatrix> action{L.action_of(eps.image_a)};
  if (L.group().kind() == GroupKind::Klein) action.push_back(L.action_of(eps.image_b));
  return GLattice(L.group(), std::move(action));
}

EndoBasis intertwiner_lattice(const GLattice& L1, const GLattice& L2, const GroupAutomorphism& eps) {
  if (L1.rank() != L2.rank()) throw std::invalid_argument("intertwiner_lattice: rank mismatch");
  if (L1.group() != L2.group() || eps.group != L1.group())
    throw std::invalid_argument("intertwiner_lattice: group mismatch");
  const PGroup& G = L1.group();
  const int m = L1.rank();
  const int N = m * m;
  const Int d = G.order();
  // norm operator N(X) = sum_g action2(eps(g)) X action1(g^-1).  Its image
  // spans the intertwiner space over Q and N acts as |G| on intertwiners,
  // so the saturated lattice is {X integral : d X in im(N)}.
  std::vector<IntMatrix> B, C;
  for (const auto& g : all_elements(G)) {
    B.push_back(L2.action_of(eps.apply(g)));
    C.push_back(L1.action_of(inverse_element(G, g)));
  }
  IntMatrix M(N, N);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // image of the matrix unit E_ij: sum_g (col i of B_g) (row j of C_g)
      const int row = i * m + j;
      for (size_t t = 0; t < B.size(); ++t)
        for (int r = 0; r < m; ++r) {
          const Int& b = B[t].at(r, i);
          if (b == 0) continue;
          for (int c = 0; c < m; ++c)
            if (C[t].at(j, c) != 0) M.at(row, r * m + c) += b * C[t].at(j, c);
        }
    }
  IntMatrix H = hnf_basis(M);
  const int rk = H.rows();
  if (rk == 0) return {};
  // c H is divisible by d iff z D = 0 mod d where c = z U; solve per factor
  auto snf = smith_normal_form(H);
  EndoBasis basis;
  IntMatrix sat(rk, N);
  for (int i = 0; i < rk; ++i) {
    Int mult = d / gcd(d, snf.D.at(i, i));
    std::vector<Int> c(rk, Int(0));
    for (int k = 0; k < rk; ++k) c[k] = mult * snf.U.at(i, k);
    for (int j = 0; j < N; ++j) {
      Int v(0);
      for (int k = 0; k < rk; ++k)
        if (c[k] != 0) v += c[k] * H.at(k, j);
      sat.at(i, j) = v / d;
    }
  }
  IntMatrix K = hnf_basis(sat);
  for (int r = 0; r < K.rows(); ++r) {
    IntMatrix T(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) T.at(i, j) = K.at(r, i * m + j);
    basis.push_back(std::move(T));
  }
  return basis;
}

EndoBasis endomorphism_ring(const GLattice& L) {
  GroupAutomorphism id{L.group(), element(L.group(), 1, 0),
                       L.group().kind() == GroupKind::Klein ? element(L.group(), 0, 1)
                                                            : identity_element()};
  return intertwiner_lattice(L, L, id);
}

namespace {

using ModMatrix = std::vector<long>;  // m*m entries in [0, p)

ModMatrix reduce_mod(const IntMatrix& M, long p) {
  ModMatrix r(size_t(M.rows()) * M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      Int q = M.at(i, j) % p;
      long v = q.get_si();
      r[size_t(i) * M.cols() + j] = v < 0 ? v + p : v;
    }
  return r;
}

bool is_idempotent_mod(const ModMatrix& X, int m, long p) {
  // X*X == X
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      long s = 0;
      for (int k = 0; k < m; ++k) s += X[size_t(i) * m + k] * X[size_t(k) * m + j] % p;
      if ((s - X[size_t(i) * m + j]) % p != 0) return false;
    }
  return true;
}

}  // namespace

IndecomposabilityResult is_indecomposable(const GLattice& L, std::uint64_t budget) {
  const long p = L.group().p();
  const int m = L.rank();
  EndoBasis endo = endomorphism_ring(L);
  const size_t d = endo.size();
  // p^d <= budget?
  long double space = 1;
  for (size_t i = 0; i < d; ++i) {
    space *= p;
    if (space > (long double)budget) return {Decomposability::Unknown, std::nullopt};
  }
  std::vector<ModMatrix> basis_mod;
  basis_mod.reserve(d);
  for (const auto& E : endo) basis_mod.push_back(reduce_mod(E, p));
  std::vector<long> c(d, 0);
  ModMatrix X(size_t(m) * m);
  const std::uint64_t total = std::uint64_t(space);
  for (std::uint64_t it = 1; it < total; ++it) {
    // increment counter in base p
    for (size_t i = 0; i < d; ++i) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
    std::fill(X.begin(), X.end(), 0);
    for (size_t i = 0; i < d; ++i) {
      if (c[i] == 0) continue;
      for (size_t k = 0; k < X.size(); ++k) X[k] = (X[k] + c[i] * basis_mod[i][k]) % p;
    }
    bool zero = true, ident = true;
    for (int i = 0; i < m && (zero || ident); ++i)
      for (int j = 0; j < m; ++j) {
        long v = X[size_t(i) * m + j];
        if (v != 0) zero = false;
        if (v != (i == j ? 1 : 0)) ident = false;
      }
    if (zero || ident) continue;
    if (is_idempotent_mod(X, m, p)) {
      IntMatrix W(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) W.at(i, j) = X[size_t(i) * m + j];
      return {Decomposability::Decomposable, W};
    }
  }
  return {Decomposability::Indecomposable, std::nullopt};
}

CpMultiplicities cp_decomposition_multiplicities(const GLattice& L) {
  const PGroup& G = L.group();
  if (G.kind() != GroupKind::Cyclic || G.s() != 1)
    throw std::invalid_argument("cp_decomposition_multiplicities: group is not C_p");
  const long p = G.p();
  const IntMatrix& A = L.action_a();
  IntMatrix N = L.norm_matrix(element(G, 1));
  IntMatrix AmI = A - IntMatrix::identity(L.rank());

  IntMatrix fixed = integer_kernel(AmI);
  IntMatrix norm_image = hnf_basis(N.transpose());
  auto h0 = finite_quotient(fixed, norm_image);

  IntMatrix ker_norm = integer_kernel(N);
  IntMatrix aug_image = hnf_basis(AmI.transpose());
  auto h1 = finite_quotient(ker_norm, aug_image);

  for (const auto& f : h0.invariant_factors)
    if (f != p) throw std::logic_error("cp_decomposition_multiplicities: H^0 not elementary abelian");
  for (const auto& f : h1.invariant_factors)
    if (f != p) throw std::logic_error("cp_decomposition_multiplicities: H^1 not elementary abelian");

  CpMultiplicities out;
  out.trivial = long(h0.invariant_factors.size());
  out.cyclotomic = long(h1.invariant_factors.size());
  long rest = L.rank() - out.trivial - (p - 1) * out.cyclotomic;
  if (rest < 0 || rest % p != 0)
    throw std::logic_error("cp_decomposition_multiplicities: inconsistent rank bookkeeping");
  out.regular = rest / p;
  return out;
}

std::optional<UnitIntertwiner> find_unit_intertwiner(const EndoBasis& basis, long p,
                                                     std::uint64_t budget, std::uint64_t seed,
                                                     int random_trials) {
  if (basis.empty()) return std::nullopt;
  const size_t d = basis.size();
  const int m = basis[0].rows();
  auto combine = [&](const std::vector<long>& c) {
    IntMatrix T(m, m);
    for (size_t i = 0; i < d; ++i) {
      if (c[i] == 0) continue;
      T = T + basis[i] * Int(c[i]);
    }
    return T;
  };
  auto check = [&](const IntMatrix& T) -> std::optional<UnitIntertwiner> {
    if (det_mod_p(T, p) == 0) return std::nullopt;
    Int dt = T.det();
    return UnitIntertwiner{T, dt == 1 || dt == -1};
  };
  long double space = 1;
  bool exhaustive = true;
  for (size_t i = 0; i < d; ++i) {
    space *= p;
    if (space > (long double)budget) { exhaustive = false; break; }
  }
  if (exhaustive) {
    std::vector<long> c(d, 0);
    const std::uint64_t total = std::uint64_t(space);
    for (std::uint64_t it = 1; it < total; ++it) {
      for (size_t i = 0; i < d; ++i) {
        if (++c[i] < p) break;
        c[i] = 0;
      }
      if (auto u = check(combine(c))) return u;
    }
    return std::nullopt;
  }
  // single basis elements first, then seeded random combinations
  for (size_t i = 0; i < d; ++i) {
    std::vector<long> c(d, 0);
    c[i] = 1;
    if (auto u = check(combine(c))) return u;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(0, p - 1);
  for (int t = 0; t < random_trials; ++t) {
    std::vector<long> c(d);
    for (auto& x : c) x = coef(rng);
    if (auto u = check(combine(c))) return u;
  }
  return std::nullopt;
}

}  // namespace crys
