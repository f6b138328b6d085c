#pragma once
// Exact integer/rational linear algebra: Hermite and Smith normal forms,
// saturated integer kernels, lattice membership and finite lattice quotients.
// All arithmetic is arbitrary precision (GMP); there is no floating point
// anywhere in this library.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crys {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Dense integer matrix, row major.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  }
  IntMatrix(int rows, int cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != size_t(rows) * cols) throw std::invalid_argument("IntMatrix: entry count mismatch");
  }
  // Row-of-rows constructor, mainly for tests and hardcoded block matrices.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix operator*(const Int& c) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;  // column vector
  RatVec operator*(const RatVec& v) const;

  IntMatrix pow(unsigned long k) const;  // square matrices only

  // Exact determinant (Bareiss).
  Int det() const;

  // Stacks o below this (same column count).
  IntMatrix stacked(const IntMatrix& o) const;
  // Places o to the right of this (same row count).
  IntMatrix beside(const IntMatrix& o) const;
  IntMatrix row(int i) const;
  void set_row(int i, const std::vector<Int>& v);
  std::vector<Int> row_vec(int i) const;

  std::string to_string() const;

private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// Invariant factors d1 | d2 | ... | dk, each >= 2; trivial group is empty.
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;
  bool trivial() const { return invariant_factors.empty(); }
  Int order() const {
    Int n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
  }
  bool operator==(const FiniteAbelianGroup& o) const = default;
  std::string to_string() const;
};

struct HnfResult {
  IntMatrix H;  // row-style HNF of A
  IntMatrix U;  // unimodular, U*A == H
};

// Row-style Hermite normal form: row echelon, positive pivots, entries above
// pivots reduced into [0, pivot).
HnfResult hermite_normal_form(const IntMatrix& A);

struct SnfResult {
  IntMatrix D;  // diagonal, d1 | d2 | ... >= 0
  IntMatrix U, V;  // unimodular, U*A*V == D
};

SnfResult smith_normal_form(const IntMatrix& A);

// Saturated basis (as rows) of {x in Z^cols : A*x == 0}.
IntMatrix integer_kernel(const IntMatrix& A);

// HNF basis of the lattice generated by the rows of M, zero rows stripped.
// This is the canonical basis used for all lattice equality tests.
IntMatrix hnf_basis(const IntMatrix& M);

// If v lies in the lattice generated by the rows of the HNF basis H, returns
// the integer coefficient vector c with c*H == v.
std::optional<std::vector<Int>> lattice_coords(const IntMatrix& H, const RatVec& v);

// Rank over Q.
int rank(const IntMatrix& A);

// One rational solution y of A*y == b (columns), if the system is consistent.
std::optional<RatVec> solve_rational(const IntMatrix& A, const RatVec& b);

// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& A);

// Determinant modulo a prime, by Gaussian elimination over F_p.
long det_mod_p(const IntMatrix& A, long p);

struct MembershipWitness {
  RatVec x;                        // point of the subspace part: t - x_part in lattice
  std::vector<Int> lattice_coeffs; // integer combination of the rows of L
};

// Decides t in span_Q(columns of S) + lattice(rows of L), exactly.
std::optional<MembershipWitness> member_subspace_plus_lattice(const RatVec& t,
                                                              const IntMatrix& S,
                                                              const IntMatrix& L);

// Invariant factors of lattice(L_big)/lattice(L_small).  Throws if the small
// lattice is not contained in the big one or the index is infinite.
FiniteAbelianGroup finite_quotient(const IntMatrix& L_big, const IntMatrix& L_small);

// Helpers shared across modules.
Int gcd(const Int& a, const Int& b);
Rat make_rat(const Int& num, const Int& den);  // reduced, positive denominator
Rat fractional_part(const Rat& q);  // in [0,1)
RatVec scale(const RatVec& v, const Rat& c);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
bool is_integral(const RatVec& v);
bool is_zero(const RatVec& v);
Int common_denominator(const RatVec& v);

}  // namespace crys
