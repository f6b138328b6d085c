#pragma once
// Constructors for the named lattice and cocycle families: cyclotomic root
// lattices over C_{p^s}, the X/Y/U series inside the group ring of C_{p^2},
// a rank-2p^2 module over C_p x C_p, and the klein block-matrix series with
// their admissible half-integer cocycles.

#include "crys/crysgroup.hpp"

#include <string>
#include <utility>

namespace crys {

struct CatalogEntry {
  std::string descriptor;
  LatticePtr lattice;
  // named canonical cocycles; every entry validates against the lattice
  std::vector<std::pair<std::string, Cocycle>> canonical_cocycles;

  const Cocycle& cocycle(const std::string& name) const;
};

// Multiplication by a primitive p^t-th root of unity on its integer span,
// viewed over C_{p^s}.  Rank p^{t-1}(p-1) for t >= 1, rank 1 for t = 0.
// The basis ordering is the recursive block order, so that the p-th power
// of the action is the block-diagonal sum of p copies of the level t-1
// action.
GLattice delta_t(long p, long s, long t);

// The rank n(1 + (p-1) + p(p-1) + p^{s-1}(p-1)) module over C_{p^s} built
// from the four root-lattice blocks with a nilpotent coupling, together with
// its canonical cocycle a -> p^{-s} e_1.  Requires s >= 3, n >= 1.
CatalogEntry theorem1_module(long p, long s, long n);

// X_i = <u, w, v> inside the group ring of C_{p^2}, where u = Phi(a)Phi(a^p),
// w = (a-1)Phi(a^p), v = Phi(a) + (a-1)^{i+1}; rank p^2.  Canonical cocycle
// a -> p^{-2} u.  Requires 0 <= i <= p-2.
CatalogEntry xi_module(long p, long i);

// Y_i = <Phi(a), (a-1)^i> inside the group ring of C_{p^2}; Y_0 is the whole
// ring.  Test cocycles a -> lambda p^{-2} Phi(a)Phi(a^p), lambda = 1..p-1.
// Requires 0 <= i <= p-1.
CatalogEntry yi_module(long p, long i);

// U_j = <((a-1)^{j+1} + Phi(a), (a-1)^j), Phi(a^p)(a-1, 1)> inside the rank-2
// free module over the group ring of C_{p^2}; rank p^2 + 1.  Canonical
// cocycle a -> p^{-2} Phi(a)Phi(a^p) (1, 0).  Construction verifies the two
// coordinate projections: the first maps onto X_j with kernel spanned by
// (0, Phi(a)Phi(a^p)), the second onto a copy of Y_j with kernel spanned by
// (Phi(a)Phi(a^p), 0).  Requires p odd, 1 <= j <= p-2.
CatalogEntry uj_module(long p, long j);

// U_0 = Phi(a) times the group ring of C_{p^2}; rank checked against the
// row rank of the multiplication-by-Phi(a) matrix.  Test cocycles
// a -> lambda p^{-2} Phi(a)Phi(a^p).
CatalogEntry u0_module(long p);

// The sublattice of the rank-2 free module over Z[C_p x C_p] spanned by
// (Phi(a), 0), (p, 0), (0, Phi(b)), (0, p), (b-1, 1-a); rank 2p^2.
// Canonical cocycle a -> (1, 0), b -> (0, 1).
CatalogEntry lemma12_module(long p);

enum class KleinKind { DeltaN, DeltaNStar, WN, WNStar };

std::string klein_kind_name(KleinKind kind);

// The block-matrix series over C_2 x C_2: degree 4n+1 for the Delta kinds
// (n >= 1), 4n+4 for the W kinds (n >= 0); the starred kinds are the
// contragredients.  Kinds that admit torsion-free cocycles carry one
// canonical choice.
CatalogEntry klein_rep(KleinKind kind, long n);

// Admissible half-integer cocycle for the torsion-free-admitting kinds.
// DeltaN: params are the n free components of f(b) (each 0 or 1/2, summing
// to 1/2 mod 1).  WNStar: params are the n unconstrained free components.
// DeltaNStar and WN accept only n = 1 with empty params.
Cocycle theorem3_cocycle(KleinKind kind, long n, const std::vector<Rat>& params = {});

// Number of admissible parameter vectors in the table row for this kind.
long theorem3_param_count(KleinKind kind, long n);

struct Theorem3Report {
  Int h1_order = 1;
  long param_count = 0;           // admissible table parameter vectors
  long torsion_free_classes = 0;  // raw torsion-free class count in H1
  long torsion_free_count = 0;    // isomorphism orbit count
};

// Enumerates every class of H1 for the kind's lattice, tests each for
// torsion-freeness and partitions the torsion-free ones into isomorphism
// orbits.
Theorem3Report enumerate_theorem3(KleinKind kind, long n,
                                  std::uint64_t budget = (std::uint64_t(1) << 20),
                                  std::uint64_t seed = 0);

struct ClassifiedRow {
  std::string descriptor;
  FiniteAbelianGroup h1_structure;
  Int h1_order = 1;
  long torsion_free_classes = 0;
  long iso_orbits = 0;
};

struct Theorem2Report {
  long p = 0;
  std::vector<ClassifiedRow> rows;
  long total_orbits = 0;     // orbit total over all rows
  long expected_total = 0;   // 2p - 3
};

// Classifies every X_i, U_j, Y_i and U_0 over C_{p^2} and totals the
// torsion-free isomorphism orbits.
Theorem2Report theorem2_report(long p, std::uint64_t budget = (std::uint64_t(1) << 20),
                               std::uint64_t seed = 0);

struct Theorem3Row {
  KleinKind kind;
  long n = 0;
  Theorem3Report counts;
  long expected_count = 0;
};

// Enumerates the klein series DeltaN (n = 1..n_max), WNStar and WN
// (n = 0..n_max - 1) and DeltaNStar (n = 1..n_max), with the expected
// torsion-free counts alongside.
std::vector<Theorem3Row> theorem3_rows(long n_max, std::uint64_t budget = (std::uint64_t(1) << 20),
                                       std::uint64_t seed = 0);

}  // namespace crys
