#include "crys/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace crys {

const Cocycle& CatalogEntry::cocycle(const std::string& name) const {
  for (const auto& [n, T] : canonical_cocycles)
    if (n == name) return T;
  throw std::invalid_argument("CatalogEntry: no cocycle named " + name);
}

namespace {

long pow_long(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

LatticePtr shared_lattice(GLattice L) { return std::make_shared<GLattice>(std::move(L)); }

IntMatrix kron(const IntMatrix& A, const IntMatrix& B) {
  IntMatrix R(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      if (A.at(i, j) == 0) continue;
      for (int k = 0; k < B.rows(); ++k)
        for (int l = 0; l < B.cols(); ++l)
          R.at(i * B.rows() + k, j * B.cols() + l) = A.at(i, j) * B.at(k, l);
    }
  return R;
}

void put_block(IntMatrix& M, int r0, int c0, const IntMatrix& B) {
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) M.at(r0 + i, c0 + j) = B.at(i, j);
}

IntMatrix jordan(int n) {
  IntMatrix J = IntMatrix::identity(n);
  for (int i = 0; i + 1 < n; ++i) J.at(i, i + 1) = 1;
  return J;
}

// rows x cols, zero except a single 1 in the last column's first row
IntMatrix last_column_unit(int rows, int cols) {
  IntMatrix O(rows, cols);
  O.at(0, cols - 1) = 1;
  return O;
}

RatVec ring_over(const GroupRingElement& x, long den) {
  RatVec v;
  v.reserve(x.coeffs().size());
  for (const auto& c : x.coeffs()) v.push_back(make_rat(c, den));
  return v;
}

RatVec concat(const RatVec& a, const RatVec& b) {
  RatVec v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

std::vector<Int> concat_int(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

Cocycle ambient_cocycle(const LatticePtr& L, const std::vector<RatVec>& ambient_values) {
  Cocycle T{L, {}};
  for (const auto& v : ambient_values) T.values.push_back(CosetVector::reduce(L->ambient_to_coords(v)));
  if (!validate_cocycle(T)) throw std::runtime_error("catalog: canonical cocycle failed validation");
  return T;
}

}  // namespace

GLattice delta_t(long p, long s, long t) {
  if (!is_prime(p)) throw std::invalid_argument("delta_t: p must be prime");
  if (s < 1 || t < 0 || t > s) throw std::invalid_argument("delta_t: index out of range");
  auto G = PGroup::cyclic(p, s);
  if (t == 0) return GLattice(G, {IntMatrix::identity(1)});

  // basis exponents of the primitive p^t-th root, in recursive block order
  std::vector<long> expo;
  for (long e = 0; e <= p - 2; ++e) expo.push_back(e);
  for (long lvl = 2; lvl <= t; ++lvl) {
    std::vector<long> next;
    next.reserve(expo.size() * p);
    for (long i = 0; i < p; ++i)
      for (long m : expo) next.push_back(i + p * m);
    expo = next;
  }
  std::map<long, int> pos;
  for (size_t c = 0; c < expo.size(); ++c) pos[expo[c]] = int(c);

  const long q = pow_long(p, t - 1);
  const int r = int(expo.size());
  IntMatrix M(r, r);
  for (int c = 0; c < r; ++c) {
    long e = expo[c] + 1;
    if (e / q <= p - 2) {
      M.at(pos.at(e), c) = 1;
    } else {
      // top digit p-1: reduce with the minimal polynomial of the root
      long rem = e - (p - 1) * q;
      for (long k = 0; k <= p - 2; ++k) M.at(pos.at(rem + k * q), c) -= 1;
    }
  }
  return GLattice(G, {M});
}

CatalogEntry theorem1_module(long p, long s, long n) {
  if (!is_prime(p)) throw std::invalid_argument("theorem1_module: p must be prime");
  if (s < 3) throw std::invalid_argument("theorem1_module: s must be at least 3");
  if (n < 1) throw std::invalid_argument("theorem1_module: n must be positive");
  auto G = PGroup::cyclic(p, s);
  const IntMatrix D0 = IntMatrix::identity(1);
  const IntMatrix D1 = delta_t(p, s, 1).action_a();
  const IntMatrix D2 = delta_t(p, s, 2).action_a();
  const IntMatrix Ds = delta_t(p, s, s).action_a();
  const int r1 = D1.rows(), r2 = D2.rows(), rs = Ds.rows();
  const int in = int(n);
  const IntMatrix En = IntMatrix::identity(in);
  const IntMatrix Jn = jordan(in);

  const int top = in * (1 + r1);       // trivial + level-1 blocks
  const int bot = in * (r2 + rs);      // level-2 + level-s blocks
  IntMatrix A(top + bot, top + bot);
  put_block(A, 0, 0, kron(En, D0));
  put_block(A, in, in, kron(En, D1));
  put_block(A, top, top, kron(En, D2));
  put_block(A, top + in * r2, top + in * r2, kron(En, Ds));
  // nilpotent coupling into the lower blocks
  put_block(A, 0, top, kron(En, last_column_unit(1, r2)));
  put_block(A, 0, top + in * r2, kron(Jn, last_column_unit(1, rs)));
  put_block(A, in, top, kron(En, last_column_unit(r1, r2)));
  put_block(A, in, top + in * r2, kron(Jn, last_column_unit(r1, rs)));

  auto L = shared_lattice(GLattice(G, {A}));
  RatVec val(L->rank(), Rat(0));
  val[0] = make_rat(1, pow_long(p, s));
  Cocycle T{L, {CosetVector::reduce(val)}};
  if (!validate_cocycle(T)) throw std::runtime_error("theorem1_module: cocycle failed validation");

  std::ostringstream d;
  d << "Thm1(p=" << p << ",s=" << s << ",n=" << n << ")";
  return CatalogEntry{d.str(), L, {{"canonical", std::move(T)}}};
}

CatalogEntry xi_module(long p, long i) {
  if (!is_prime(p)) throw std::invalid_argument("xi_module: p must be prime");
  if (i < 0 || i > p - 2) throw std::invalid_argument("xi_module: i out of range");
  auto G = PGroup::cyclic(p, 2);
  auto amb = regular_lattice(G);
  auto a = ring_element(G, element(G, 1));
  auto one = ring_unit(G);
  auto u = phi_element(G, element(G, 1)) * phi_element(G, element(G, p));
  auto w = (a - one) * phi_element(G, element(G, p));
  auto v = phi_element(G, element(G, 1)) + (a - one).pow(i + 1);
  auto L = shared_lattice(sublattice_span(amb, {u.coeffs(), w.coeffs(), v.coeffs()}));
  if (L->rank() != p * p) throw std::runtime_error("xi_module: unexpected rank");

  auto T = ambient_cocycle(L, {ring_over(u, p * p)});
  std::ostringstream d;
  d << "Xi(p=" << p << ",i=" << i << ")";
  return CatalogEntry{d.str(), L, {{"canonical", std::move(T)}}};
}

CatalogEntry yi_module(long p, long i) {
  if (!is_prime(p)) throw std::invalid_argument("yi_module: p must be prime");
  if (i < 0 || i > p - 1) throw std::invalid_argument("yi_module: i out of range");
  auto G = PGroup::cyclic(p, 2);
  auto amb = regular_lattice(G);
  auto a = ring_element(G, element(G, 1));
  auto phi = phi_element(G, element(G, 1));
  auto pw = (a - ring_unit(G)).pow(i);
  auto L = shared_lattice(sublattice_span(amb, {phi.coeffs(), pw.coeffs()}));

  auto norm = phi_element(G, element(G, 1)) * phi_element(G, element(G, p));
  std::vector<std::pair<std::string, Cocycle>> cocycles;
  for (long lam = 1; lam < p; ++lam) {
    auto scaled = norm * Int(lam);
    cocycles.emplace_back("lambda=" + std::to_string(lam),
                          ambient_cocycle(L, {ring_over(scaled, p * p)}));
  }
  std::ostringstream d;
  d << "Yi(p=" << p << ",i=" << i << ")";
  return CatalogEntry{d.str(), L, std::move(cocycles)};
}

CatalogEntry uj_module(long p, long j) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("uj_module: p must be an odd prime");
  if (j < 1 || j > p - 2) throw std::invalid_argument("uj_module: j out of range");
  auto G = PGroup::cyclic(p, 2);
  const int p2 = int(p * p);
  auto amb = free_module(G, 2);
  auto a = ring_element(G, element(G, 1));
  auto one = ring_unit(G);
  auto phi = phi_element(G, element(G, 1));
  auto phip = phi_element(G, element(G, p));
  auto g1l = (a - one).pow(j + 1) + phi;
  auto g1r = (a - one).pow(j);
  auto g2l = (a - one) * phip;
  auto L = shared_lattice(sublattice_span(
      amb, {concat_int(g1l.coeffs(), g1r.coeffs()), concat_int(g2l.coeffs(), phip.coeffs())}));
  if (L->rank() != p2 + 1) throw std::runtime_error("uj_module: unexpected rank");

  // exactness checks via the two coordinate projections
  const IntMatrix& B = L->embedding()->basis;
  IntMatrix Bl(L->rank(), p2), Br(L->rank(), p2);
  for (int r = 0; r < L->rank(); ++r)
    for (int c = 0; c < p2; ++c) {
      Bl.at(r, c) = B.at(r, c);
      Br.at(r, c) = B.at(r, c + p2);
    }
  auto norm = phi * phip;
  // first projection maps onto the X module of the same index ...
  if (hnf_basis(Bl) != xi_module(p, j).lattice->embedding()->basis)
    throw std::runtime_error("uj_module: first projection image mismatch");
  // ... with kernel exactly the fixed vector (0, Phi(a)Phi(a^p))
  {
    IntMatrix K = integer_kernel(Bl.transpose());
    if (K.rows() != 1) throw std::runtime_error("uj_module: first projection kernel rank");
    RatVec img(2 * p2, Rat(0));
    for (int r = 0; r < L->rank(); ++r)
      for (int c = 0; c < 2 * p2; ++c) img[c] += Rat(K.at(0, r)) * Rat(B.at(r, c));
    RatVec u2 = concat(RatVec(p2, Rat(0)), ring_over(norm, 1));
    if (img != u2 && img != scale(u2, Rat(-1)))
      throw std::runtime_error("uj_module: first projection kernel mismatch");
  }
  // second projection maps onto the Y module of the same index ...
  if (hnf_basis(Br) != yi_module(p, j).lattice->embedding()->basis)
    throw std::runtime_error("uj_module: second projection image mismatch");
  // ... with kernel exactly (Phi(a)Phi(a^p), 0)
  {
    IntMatrix K = integer_kernel(Br.transpose());
    if (K.rows() != 1) throw std::runtime_error("uj_module: second projection kernel rank");
    RatVec img(2 * p2, Rat(0));
    for (int r = 0; r < L->rank(); ++r)
      for (int c = 0; c < 2 * p2; ++c) img[c] += Rat(K.at(0, r)) * Rat(B.at(r, c));
    RatVec u1 = concat(ring_over(norm, 1), RatVec(p2, Rat(0)));
    if (img != u1 && img != scale(u1, Rat(-1)))
      throw std::runtime_error("uj_module: second projection kernel mismatch");
  }

  auto T = ambient_cocycle(L, {concat(ring_over(norm, p * p), RatVec(p2, Rat(0)))});
  std::ostringstream d;
  d << "Uj(p=" << p << ",j=" << j << ")";
  return CatalogEntry{d.str(), L, {{"canonical", std::move(T)}}};
}

CatalogEntry u0_module(long p) {
  if (!is_prime(p)) throw std::invalid_argument("u0_module: p must be prime");
  auto G = PGroup::cyclic(p, 2);
  auto amb = regular_lattice(G);
  auto phi = phi_element(G, element(G, 1));
  auto L = shared_lattice(sublattice_span(amb, {phi.coeffs()}));
  if (L->rank() != rank(phi.multiplication_matrix()))
    throw std::runtime_error("u0_module: rank disagrees with the multiplication matrix");

  auto norm = phi * phi_element(G, element(G, p));
  std::vector<std::pair<std::string, Cocycle>> cocycles;
  for (long lam = 1; lam < p; ++lam) {
    auto scaled = norm * Int(lam);
    cocycles.emplace_back("lambda=" + std::to_string(lam),
                          ambient_cocycle(L, {ring_over(scaled, p * p)}));
  }
  std::ostringstream d;
  d << "U0(p=" << p << ")";
  return CatalogEntry{d.str(), L, std::move(cocycles)};
}

CatalogEntry lemma12_module(long p) {
  if (!is_prime(p)) throw std::invalid_argument("lemma12_module: p must be prime");
  auto G = PGroup::klein(p);
  const int p2 = int(p * p);
  auto amb = free_module(G, 2);
  auto phia = phi_element(G, element(G, 1, 0));
  auto phib = phi_element(G, element(G, 0, 1));
  auto pconst = ring_unit(G) * Int(p);
  auto bm1 = ring_element(G, element(G, 0, 1)) - ring_unit(G);
  auto oma = ring_unit(G) - ring_element(G, element(G, 1, 0));
  std::vector<Int> zero(p2, Int(0));
  auto L = shared_lattice(sublattice_span(amb, {concat_int(phia.coeffs(), zero),
                                                concat_int(pconst.coeffs(), zero),
                                                concat_int(zero, phib.coeffs()),
                                                concat_int(zero, pconst.coeffs()),
                                                concat_int(bm1.coeffs(), oma.coeffs())}));
  if (L->rank() != 2 * p2) throw std::runtime_error("lemma12_module: unexpected rank");

  RatVec ea(2 * p2, Rat(0)), eb(2 * p2, Rat(0));
  ea[0] = 1;        // the unit of the first copy
  eb[p2] = 1;       // the unit of the second copy
  auto T = ambient_cocycle(L, {ea, eb});
  std::ostringstream d;
  d << "Lemma12(p=" << p << ")";
  return CatalogEntry{d.str(), L, {{"canonical", std::move(T)}}};
}

std::string klein_kind_name(KleinKind kind) {
  switch (kind) {
    case KleinKind::DeltaN: return "DeltaN";
    case KleinKind::DeltaNStar: return "DeltaNStar";
    case KleinKind::WN: return "WN";
    case KleinKind::WNStar: return "WNStar";
  }
  throw std::logic_error("klein_kind_name");
}

namespace {

// the degree 4n+1 pair (n >= 1)
std::pair<IntMatrix, IntMatrix> delta_series(int n) {
  const int m = 4 * n + 1;
  const IntMatrix E = IntMatrix::identity(n);
  IntMatrix A(m, m), B(m, m);
  // row/col offsets n,1,n,n,n
  put_block(A, 0, 0, E);
  put_block(A, 0, 2 * n + 1, E);
  A.at(n, n) = 1;
  put_block(A, n + 1, n + 1, -E);
  put_block(A, n + 1, 3 * n + 1, E);
  put_block(A, 2 * n + 1, 2 * n + 1, -E);
  put_block(A, 3 * n + 1, 3 * n + 1, E);
  // row/col offsets 1,n,n,n,n
  B.at(0, 0) = 1;
  put_block(B, 1, 1, E);
  put_block(B, 1, 3 * n + 1, E);
  put_block(B, n + 1, n + 1, -E);
  put_block(B, n + 1, 2 * n + 1, E);
  put_block(B, 2 * n + 1, 2 * n + 1, E);
  put_block(B, 3 * n + 1, 3 * n + 1, -E);
  return {A, B};
}

// the degree 4n+4 pair (n >= 0)
std::pair<IntMatrix, IntMatrix> w_series(int n) {
  if (n == 0) {
    IntMatrix A{{1, 1, 0, 1}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    IntMatrix B{{1, 1, 1, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}};
    return {A, B};
  }
  const int m = 4 * n + 4;
  const IntMatrix En = IntMatrix::identity(n);
  const IntMatrix E1 = IntMatrix::identity(n + 1);
  IntMatrix D{{1, 1}, {0, -1}};
  IntMatrix V(n, n + 1), Vp(n, n + 1), S(2, n + 1);
  for (int i = 0; i < n; ++i) {
    V.at(i, i + 1) = 1;
    Vp.at(i, i) = 1;
  }
  S.at(0, n - 1) = 1;
  S.at(0, n) = 1;
  // offsets 2, n, n, n+1, n+1
  const int o1 = 2, o2 = 2 + n, o3 = 2 + 2 * n, o4 = 3 + 3 * n;
  IntMatrix A(m, m), B(m, m);
  put_block(A, 0, 0, D);
  put_block(A, o1, o1, En);
  put_block(A, o1, o4, V);
  put_block(A, o2, o2, -En);
  put_block(A, o2, o3, V);
  put_block(A, o3, o3, E1);
  put_block(A, o4, o4, -E1);
  put_block(B, 0, 0, D);
  put_block(B, 0, o3, S);
  put_block(B, o1, o1, En);
  put_block(B, o1, o3, Vp);
  put_block(B, o2, o2, -En);
  put_block(B, o2, o4, Vp);
  put_block(B, o3, o3, -E1);
  put_block(B, o4, o4, E1);
  return {A, B};
}

Rat half() { return make_rat(1, 2); }

bool is_half_integer(const Rat& q) {
  Rat f = fractional_part(q);
  return f == 0 || f == half();
}

}  // namespace

CatalogEntry klein_rep(KleinKind kind, long n) {
  const bool delta = kind == KleinKind::DeltaN || kind == KleinKind::DeltaNStar;
  const bool starred = kind == KleinKind::DeltaNStar || kind == KleinKind::WNStar;
  if (delta && n < 1) throw std::invalid_argument("klein_rep: n must be positive");
  if (!delta && n < 0) throw std::invalid_argument("klein_rep: n must be nonnegative");
  auto [A, B] = delta ? delta_series(int(n)) : w_series(int(n));
  auto G = PGroup::klein(2);
  GLattice base(G, {A, B});
  auto L = shared_lattice(starred ? contragredient(base) : std::move(base));

  std::vector<std::pair<std::string, Cocycle>> cocycles;
  if (kind == KleinKind::DeltaN) {
    std::vector<Rat> params(n, Rat(0));
    params.back() = half();
    cocycles.emplace_back("canonical", theorem3_cocycle(kind, n, params));
  } else if (kind == KleinKind::WNStar) {
    cocycles.emplace_back("canonical", theorem3_cocycle(kind, n, std::vector<Rat>(n, Rat(0))));
  } else if (n == 1) {
    cocycles.emplace_back("canonical", theorem3_cocycle(kind, n));
  }
  return CatalogEntry{klein_kind_name(kind) + "(n=" + std::to_string(n) + ")", L,
                      std::move(cocycles)};
}

Cocycle theorem3_cocycle(KleinKind kind, long n, const std::vector<Rat>& params) {
  auto entry_lattice = [&] {
    // avoid recursion through klein_rep's canonical cocycles
    const bool delta = kind == KleinKind::DeltaN || kind == KleinKind::DeltaNStar;
    const bool starred = kind == KleinKind::DeltaNStar || kind == KleinKind::WNStar;
    if (delta && n < 1) throw std::invalid_argument("theorem3_cocycle: n must be positive");
    if (!delta && n < 0) throw std::invalid_argument("theorem3_cocycle: n must be nonnegative");
    auto [A, B] = delta ? delta_series(int(n)) : w_series(int(n));
    GLattice base(PGroup::klein(2), {A, B});
    return shared_lattice(starred ? contragredient(base) : std::move(base));
  };

  LatticePtr L;
  RatVec fa, fb;
  if (kind == KleinKind::DeltaN) {
    if (long(params.size()) != n) throw std::invalid_argument("theorem3_cocycle: expected n parameters");
    Rat sum(0);
    for (const auto& q : params) {
      if (!is_half_integer(q)) throw std::invalid_argument("theorem3_cocycle: parameters must be half-integers");
      sum += q;
    }
    if (fractional_part(sum) != half())
      throw std::invalid_argument("theorem3_cocycle: parameters must sum to 1/2");
    L = entry_lattice();
    fa.assign(L->rank(), Rat(0));
    fb.assign(L->rank(), Rat(0));
    fa[n] = half();
    fb[0] = half();
    for (long k = 0; k < n; ++k) fb[1 + k] = params[k];
  } else if (kind == KleinKind::WNStar) {
    if (long(params.size()) != n) throw std::invalid_argument("theorem3_cocycle: expected n parameters");
    for (const auto& q : params)
      if (!is_half_integer(q)) throw std::invalid_argument("theorem3_cocycle: parameters must be half-integers");
    L = entry_lattice();
    fa.assign(L->rank(), Rat(0));
    fb.assign(L->rank(), Rat(0));
    fa[2 * n + 2] = half();
    fb[1] = half();
    fb[4 * n + 3] = half();
    for (long k = 0; k < n; ++k) fb[3 * n + 3 + k] = params[k];
  } else if (kind == KleinKind::DeltaNStar) {
    if (n != 1 || !params.empty())
      throw std::invalid_argument("theorem3_cocycle: this kind admits only n=1 with no parameters");
    L = entry_lattice();
    fa = {Rat(0), half(), Rat(0), Rat(0), Rat(0)};
    fb = {half(), Rat(0), half(), make_rat(1, 4), Rat(0)};
  } else {
    if (n != 1 || !params.empty())
      throw std::invalid_argument("theorem3_cocycle: this kind admits only n=1 with no parameters");
    L = entry_lattice();
    fa = {Rat(0), Rat(0), Rat(0), Rat(0), half(), Rat(0), Rat(0), Rat(0)};
    fb = {Rat(0), half(), Rat(0), make_rat(1, 4), Rat(0), half(), Rat(0), half()};
  }
  Cocycle T{L, {CosetVector::reduce(fa), CosetVector::reduce(fb)}};
  if (!validate_cocycle(T)) throw std::runtime_error("theorem3_cocycle: failed validation");
  return T;
}

long theorem3_param_count(KleinKind kind, long n) {
  switch (kind) {
    case KleinKind::DeltaN: return n >= 1 ? pow_long(2, n - 1) : 0;
    case KleinKind::WNStar: return n >= 0 ? pow_long(2, n) : 0;
    case KleinKind::DeltaNStar: return n == 1 ? 1 : 0;
    case KleinKind::WN: return n == 1 ? 1 : 0;
  }
  throw std::logic_error("theorem3_param_count");
}

Theorem3Report enumerate_theorem3(KleinKind kind, long n, std::uint64_t budget, std::uint64_t seed) {
  auto entry = klein_rep(kind, n);
  auto res = h1(entry.lattice);
  Theorem3Report out;
  out.h1_order = res.order();
  out.param_count = theorem3_param_count(kind, n);
  if (out.h1_order > Int(1) << 12) throw std::runtime_error("enumerate_theorem3: H1 enumeration exceeds budget");

  std::vector<std::vector<Int>> tf;
  for (const auto& comp : res.all_classes())
    if (is_torsion_free(CrysGroup(res.rep_for(comp))).torsion_free) tf.push_back(comp);
  out.torsion_free_classes = long(tf.size());

  // the tabulated count holds the action pointwise fixed and identifies
  // classes carried into each other by unimodular self-intertwiners
  std::vector<int> orbit(tf.size(), -1);
  int next = 0;
  for (size_t i = 0; i < tf.size(); ++i) {
    if (orbit[i] >= 0) continue;
    orbit[i] = next;
    CrysGroup Ci(res.rep_for(tf[i]));
    for (size_t j = i + 1; j < tf.size(); ++j) {
      if (orbit[j] >= 0) continue;
      CrysGroup Cj(res.rep_for(tf[j]));
      if (extension_equivalent(Ci, Cj, budget, seed, IsoRing::Integral)) orbit[j] = next;
    }
    ++next;
  }
  out.torsion_free_count = next;
  return out;
}

Theorem2Report theorem2_report(long p, std::uint64_t budget, std::uint64_t seed) {
  if (!is_prime(p)) throw std::invalid_argument("theorem2_report: p must be prime");
  Theorem2Report report;
  report.p = p;
  report.expected_total = 2 * p - 3;
  std::vector<CatalogEntry> entries;
  for (long i = 0; i <= p - 2; ++i) entries.push_back(xi_module(p, i));
  for (long j = 1; p > 2 && j <= p - 2; ++j) entries.push_back(uj_module(p, j));
  for (long i = 0; i <= p - 1; ++i) entries.push_back(yi_module(p, i));
  entries.push_back(u0_module(p));
  for (const auto& entry : entries) {
    auto rep = classify(entry.lattice, budget, seed);
    report.rows.push_back(ClassifiedRow{entry.descriptor, rep.h1_structure, rep.h1_order,
                                        rep.torsion_free_classes, rep.iso_orbits});
    report.total_orbits += rep.iso_orbits;
  }
  return report;
}

std::vector<Theorem3Row> theorem3_rows(long n_max, std::uint64_t budget, std::uint64_t seed) {
  if (n_max < 1) throw std::invalid_argument("theorem3_rows: n_max must be positive");
  std::vector<Theorem3Row> rows;
  auto add = [&](KleinKind kind, long n, long expected) {
    rows.push_back(Theorem3Row{kind, n, enumerate_theorem3(kind, n, budget, seed), expected});
  };
  for (long n = 1; n <= n_max; ++n) add(KleinKind::DeltaN, n, pow_long(2, n - 1));
  for (long n = 0; n < n_max; ++n) add(KleinKind::WNStar, n, pow_long(2, n));
  for (long n = 1; n <= n_max; ++n) add(KleinKind::DeltaNStar, n, n == 1 ? 1 : 0);
  for (long n = 0; n <= n_max; ++n) add(KleinKind::WN, n, n == 1 ? 1 : 0);
  return rows;
}

}  // namespace crys
