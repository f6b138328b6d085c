#include "crys/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace crys {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  e_.reserve(size_t(rows_) * cols_);
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long x : r) e_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

bool IntMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix T(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  return T;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix multiply: dimension mismatch");
  IntMatrix R(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) R.at(i, j) += a * o.at(k, j);
    }
  return R;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix add: dimension mismatch");
  IntMatrix R(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) R.e_[i] = e_[i] + o.e_[i];
  return R;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix sub: dimension mismatch");
  IntMatrix R(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) R.e_[i] = e_[i] - o.e_[i];
  return R;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix R(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) R.e_[i] = -e_[i];
  return R;
}

IntMatrix IntMatrix::operator*(const Int& c) const {
  IntMatrix R(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) R.e_[i] = e_[i] * c;
  return R;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("IntMatrix*vec: dimension mismatch");
  std::vector<Int> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

RatVec IntMatrix::operator*(const RatVec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("IntMatrix*vec: dimension mismatch");
  RatVec r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += Rat(at(i, j)) * v[j];
  return r;
}

IntMatrix IntMatrix::pow(unsigned long k) const {
  if (!is_square()) throw std::invalid_argument("IntMatrix::pow: not square");
  IntMatrix R = identity(rows_);
  IntMatrix B = *this;
  while (k) {
    if (k & 1) R = R * B;
    k >>= 1;
    if (k) B = B * B;
  }
  return R;
}

Int IntMatrix::det() const {
  if (!is_square()) throw std::invalid_argument("IntMatrix::det: not square");
  int n = rows_;
  if (n == 0) return 1;
  IntMatrix A = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (A.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
        mpz_divexact(A.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = A.at(k, k);
  }
  return sign > 0 ? A.at(n - 1, n - 1) : -A.at(n - 1, n - 1);
}

IntMatrix IntMatrix::stacked(const IntMatrix& o) const {
  if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
    throw std::invalid_argument("IntMatrix::stacked: column mismatch");
  int c = rows_ ? cols_ : o.cols_;
  IntMatrix R(rows_ + o.rows_, c);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < c; ++j) R.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < c; ++j) R.at(rows_ + i, j) = o.at(i, j);
  return R;
}

IntMatrix IntMatrix::beside(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("IntMatrix::beside: row mismatch");
  IntMatrix R(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) R.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) R.at(i, cols_ + j) = o.at(i, j);
  }
  return R;
}

IntMatrix IntMatrix::row(int i) const {
  IntMatrix R(1, cols_);
  for (int j = 0; j < cols_; ++j) R.at(0, j) = at(i, j);
  return R;
}

void IntMatrix::set_row(int i, const std::vector<Int>& v) {
  if (int(v.size()) != cols_) throw std::invalid_argument("set_row: dimension mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

std::vector<Int> IntMatrix::row_vec(int i) const {
  std::vector<Int> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "\n[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]";
  }
  return os.str();
}

std::string FiniteAbelianGroup::to_string() const {
  if (trivial()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < invariant_factors.size(); ++i)
    os << (i ? " x " : "") << "Z/" << invariant_factors[i];
  return os.str();
}

namespace {

// Row operation engine shared by HNF and kernel computations: reduces A to
// row HNF while mirroring every operation on U (initially the identity).
void hnf_in_place(IntMatrix& A, IntMatrix& U) {
  const int m = A.rows(), n = A.cols();
  int r = 0;
  for (int j = 0; j < n && r < m; ++j) {
    // clear below the pivot by gcd steps, keeping the smallest head entry at r
    while (true) {
      int piv = -1;
      for (int i = r; i < m; ++i) {
        if (A.at(i, j) == 0) continue;
        if (piv < 0 || mpz_cmpabs(A.at(i, j).get_mpz_t(), A.at(piv, j).get_mpz_t()) < 0) piv = i;
      }
      if (piv < 0) break;
      if (piv != r) {
        for (int c = 0; c < n; ++c) std::swap(A.at(r, c), A.at(piv, c));
        for (int c = 0; c < U.cols(); ++c) std::swap(U.at(r, c), U.at(piv, c));
      }
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (A.at(i, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), A.at(i, j).get_mpz_t(), A.at(r, j).get_mpz_t());
        if (q != 0) {
          for (int c = 0; c < n; ++c) A.at(i, c) -= q * A.at(r, c);
          for (int c = 0; c < U.cols(); ++c) U.at(i, c) -= q * U.at(r, c);
        }
        if (A.at(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (A.at(r, j) == 0) continue;
    if (A.at(r, j) < 0) {
      for (int c = 0; c < n; ++c) A.at(r, c) = -A.at(r, c);
      for (int c = 0; c < U.cols(); ++c) U.at(r, c) = -U.at(r, c);
    }
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A.at(i, j).get_mpz_t(), A.at(r, j).get_mpz_t());
      if (q != 0) {
        for (int c = 0; c < n; ++c) A.at(i, c) -= q * A.at(r, c);
        for (int c = 0; c < U.cols(); ++c) U.at(i, c) -= q * U.at(r, c);
      }
    }
    ++r;
  }
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& A) {
  HnfResult res{A, IntMatrix::identity(A.rows())};
  hnf_in_place(res.H, res.U);
  return res;
}

SnfResult smith_normal_form(const IntMatrix& A) {
  const int m = A.rows(), n = A.cols();
  SnfResult res{A, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& D = res.D;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;
  int t = 0;
  const int steps = std::min(m, n);
  while (t < steps) {
    // pick the nonzero entry of smallest absolute value in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (D.at(i, j) == 0) continue;
        if (pi < 0 || mpz_cmpabs(D.at(i, j).get_mpz_t(), D.at(pi, pj).get_mpz_t()) < 0) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    if (pi != t)
      for (int c = 0; c < n; ++c) std::swap(D.at(t, c), D.at(pi, c));
    if (pi != t)
      for (int c = 0; c < m; ++c) std::swap(U.at(t, c), U.at(pi, c));
    if (pj != t) {
      for (int r = 0; r < m; ++r) std::swap(D.at(r, t), D.at(r, pj));
      for (int r = 0; r < n; ++r) std::swap(V.at(r, t), V.at(r, pj));
    }
    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      if (D.at(i, t) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
      for (int c = 0; c < n; ++c) D.at(i, c) -= q * D.at(t, c);
      for (int c = 0; c < m; ++c) U.at(i, c) -= q * U.at(t, c);
      if (D.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < n; ++j) {
      if (D.at(t, j) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
      for (int r = 0; r < m; ++r) D.at(r, j) -= q * D.at(r, t);
      for (int r = 0; r < n; ++r) V.at(r, j) -= q * V.at(r, t);
      if (D.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // pivot must divide the trailing block for the divisibility chain
    bool divides = true;
    for (int i = t + 1; i < m && divides; ++i)
      for (int j = t + 1; j < n && divides; ++j)
        if (D.at(i, j) % D.at(t, t) != 0) {
          for (int c = 0; c < n; ++c) D.at(t, c) += D.at(i, c);
          for (int c = 0; c < m; ++c) U.at(t, c) += U.at(i, c);
          divides = false;
        }
    if (!divides) continue;
    if (D.at(t, t) < 0) {
      for (int r = 0; r < m; ++r) D.at(r, t) = -D.at(r, t);
      for (int r = 0; r < n; ++r) V.at(r, t) = -V.at(r, t);
    }
    ++t;
  }
  return res;
}

IntMatrix integer_kernel(const IntMatrix& A) {
  IntMatrix B = A.transpose();  // rows of B are the linear forms x |-> (Ax)_i ... transposed system
  IntMatrix U = IntMatrix::identity(B.rows());
  hnf_in_place(B, U);
  int rk = 0;
  for (int i = 0; i < B.rows(); ++i) {
    bool nz = false;
    for (int j = 0; j < B.cols(); ++j)
      if (B.at(i, j) != 0) { nz = true; break; }
    if (nz) ++rk;
  }
  IntMatrix K(B.rows() - rk, A.cols());
  for (int i = rk; i < B.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) K.at(i - rk, j) = U.at(i, j);
  return hnf_basis(K);
}

IntMatrix hnf_basis(const IntMatrix& M) {
  auto hnf = hermite_normal_form(M);
  int rk = 0;
  for (int i = 0; i < hnf.H.rows(); ++i) {
    bool nz = false;
    for (int j = 0; j < hnf.H.cols(); ++j)
      if (hnf.H.at(i, j) != 0) { nz = true; break; }
    if (nz) ++rk;
  }
  IntMatrix B(rk, M.cols());
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < M.cols(); ++j) B.at(i, j) = hnf.H.at(i, j);
  return B;
}

std::optional<std::vector<Int>> lattice_coords(const IntMatrix& H, const RatVec& v) {
  if (int(v.size()) != H.cols()) throw std::invalid_argument("lattice_coords: dimension mismatch");
  RatVec w = v;
  std::vector<Int> coeffs(H.rows());
  int col = 0;
  for (int i = 0; i < H.rows(); ++i) {
    while (col < H.cols() && H.at(i, col) == 0) ++col;
    if (col == H.cols()) break;
    Rat c = w[col] / Rat(H.at(i, col));
    if (c.get_den() != 1) return std::nullopt;
    coeffs[i] = c.get_num();
    if (coeffs[i] != 0)
      for (int j = col; j < H.cols(); ++j) w[j] -= c * Rat(H.at(i, j));
  }
  for (const auto& q : w)
    if (q != 0) return std::nullopt;
  return coeffs;
}

int rank(const IntMatrix& A) {
  return hnf_basis(A).rows();
}

std::optional<RatVec> solve_rational(const IntMatrix& A, const RatVec& b) {
  if (int(b.size()) != A.rows()) throw std::invalid_argument("solve_rational: dimension mismatch");
  const int m = A.rows(), n = A.cols();
  std::vector<RatVec> M(m, RatVec(n + 1, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = Rat(A.at(i, j));
    M[i][n] = b[i];
  }
  int r = 0;
  std::vector<int> pivcol;
  for (int j = 0; j < n && r < m; ++j) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (M[i][j] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(M[r], M[piv]);
    Rat inv = 1 / M[r][j];
    for (int c = j; c <= n; ++c) M[r][c] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || M[i][j] == 0) continue;
      Rat f = M[i][j];
      for (int c = j; c <= n; ++c) M[i][c] -= f * M[r][c];
    }
    pivcol.push_back(j);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (M[i][n] != 0) return std::nullopt;
  RatVec y(n, Rat(0));
  for (int i = 0; i < r; ++i) y[pivcol[i]] = M[i][n];
  return y;
}

IntMatrix unimodular_inverse(const IntMatrix& A) {
  if (!A.is_square()) throw std::invalid_argument("unimodular_inverse: not square");
  const int n = A.rows();
  IntMatrix H = A, U = IntMatrix::identity(n);
  hnf_in_place(H, U);
  if (!H.is_identity()) throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
  return U;
}

long det_mod_p(const IntMatrix& A, long p) {
  if (!A.is_square()) throw std::invalid_argument("det_mod_p: not square");
  const int n = A.rows();
  std::vector<std::vector<long>> M(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int r = A.at(i, j) % p;
      long v = r.get_si();
      if (v < 0) v += p;
      M[i][j] = v;
    }
  auto inv_mod = [p](long a) {
    long t = 0, nt = 1, r = p, nr = a;
    while (nr) { long q = r / nr; std::swap(t -= q * nt, nt); std::swap(r -= q * nr, nr); }
    return t < 0 ? t + p : t;
  };
  long det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (M[i][k]) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != k) { std::swap(M[piv], M[k]); det = (p - det) % p; }
    det = (det * M[k][k]) % p;
    long inv = inv_mod(M[k][k]);
    for (int i = k + 1; i < n; ++i) {
      if (!M[i][k]) continue;
      long f = (M[i][k] * inv) % p;
      for (int j = k; j < n; ++j) M[i][j] = ((M[i][j] - f * M[k][j]) % p + p) % p;
    }
  }
  return det % p;
}

std::optional<MembershipWitness> member_subspace_plus_lattice(const RatVec& t,
                                                              const IntMatrix& S,
                                                              const IntMatrix& L) {
  const int n = int(t.size());
  if ((S.rows() != n && S.rows() * S.cols() != 0) || (L.cols() != n && L.rows() != 0))
    throw std::invalid_argument("member_subspace_plus_lattice: dimension mismatch");
  // functionals vanishing on the column span of S
  IntMatrix F = (S.cols() == 0) ? IntMatrix::identity(n) : integer_kernel(S.transpose());
  // image of the lattice generators under F
  IntMatrix G(L.rows(), F.rows());
  for (int i = 0; i < L.rows(); ++i) {
    auto img = F * L.row_vec(i);
    for (int j = 0; j < F.rows(); ++j) G.at(i, j) = img[j];
  }
  RatVec w(F.rows(), Rat(0));
  for (int i = 0; i < F.rows(); ++i)
    for (int j = 0; j < n; ++j)
      if (F.at(i, j) != 0) w[i] += Rat(F.at(i, j)) * t[j];
  auto hnf = hermite_normal_form(G);
  IntMatrix Hb = hnf_basis(G);
  auto c = lattice_coords(Hb, w);
  if (!c) return std::nullopt;
  // pull the combination back to the rows of L: rows of Hb are U*G-rows
  std::vector<Int> cl(L.rows(), Int(0));
  for (int i = 0; i < Hb.rows(); ++i) {
    // find matching row of hnf.H (Hb is hnf.H without zero rows, same order)
    for (int j = 0; j < L.rows(); ++j) cl[j] += (*c)[i] * hnf.U.at(i, j);
  }
  RatVec lam(n, Rat(0));
  for (int j = 0; j < L.rows(); ++j)
    if (cl[j] != 0)
      for (int k = 0; k < n; ++k) lam[k] += Rat(cl[j]) * Rat(L.at(j, k));
  RatVec resid = sub(t, lam);
  if (S.cols() == 0) {
    for (const auto& q : resid)
      if (q != 0) return std::nullopt;  // unreachable: F was the identity
    return MembershipWitness{RatVec(n, Rat(0)), cl};
  }
  auto y = solve_rational(S, resid);
  if (!y) return std::nullopt;  // unreachable by construction of F
  RatVec xpart = S * *y;
  return MembershipWitness{xpart, cl};
}

FiniteAbelianGroup finite_quotient(const IntMatrix& L_big, const IntMatrix& L_small) {
  IntMatrix Bb = hnf_basis(L_big);
  IntMatrix Bs = hnf_basis(L_small);
  // express each small basis row in the big basis
  IntMatrix X(Bs.rows(), Bb.rows());
  for (int i = 0; i < Bs.rows(); ++i) {
    RatVec v(Bs.cols());
    for (int j = 0; j < Bs.cols(); ++j) v[j] = Rat(Bs.at(i, j));
    auto c = lattice_coords(Bb, v);
    if (!c) throw std::invalid_argument("finite_quotient: small lattice not contained in big lattice");
    for (int j = 0; j < Bb.rows(); ++j) X.at(i, j) = (*c)[j];
  }
  if (rank(X) < Bb.rows()) throw std::invalid_argument("finite_quotient: infinite index");
  auto snf = smith_normal_form(X);
  FiniteAbelianGroup g;
  for (int i = 0; i < std::min(snf.D.rows(), snf.D.cols()); ++i)
    if (snf.D.at(i, i) > 1) g.invariant_factors.push_back(snf.D.at(i, i));
  return g;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rat fractional_part(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Rat r = q - Rat(fl);
  r.canonicalize();
  return r;
}

RatVec scale(const RatVec& v, const Rat& c) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("RatVec add: dimension mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("RatVec sub: dimension mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q.get_den() == 1; });
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

Int common_denominator(const RatVec& v) {
  Int d = 1;
  for (const auto& q : v) {
    Int g = gcd(d, q.get_den());
    d = d / g * q.get_den();
  }
  return d;
}

}  // namespace crys
