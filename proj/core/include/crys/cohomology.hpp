#pragma once
// Cocycles with values in (Q-span of M)/M, coboundary decisions, restriction,
// pushforward along a twisted intertwiner, and first cohomology as a finite
// abelian group with explicit representative cocycles.

#include "crys/zglattice.hpp"

#include <memory>

namespace crys {

using LatticePtr = std::shared_ptr<const GLattice>;

// Element of FM/M in lattice coordinates, entries reduced into [0,1).
// Reduction is canonical, so equality of cosets is equality of coords.
struct CosetVector {
  RatVec coords;

  static CosetVector reduce(const RatVec& v);
  bool is_zero() const { return crys::is_zero(coords); }
  bool operator==(const CosetVector& o) const = default;
};

CosetVector coset_add(const CosetVector& a, const CosetVector& b);
CosetVector coset_sub(const CosetVector& a, const CosetVector& b);
CosetVector coset_scale(const CosetVector& a, const Int& k);
CosetVector coset_apply(const IntMatrix& g, const CosetVector& a);

// Values of T on the group generators (one per generator of L->group()).
struct Cocycle {
  LatticePtr lattice;
  std::vector<CosetVector> values;

  static Cocycle zero(LatticePtr L);
};

Cocycle cocycle_sub(const Cocycle& a, const Cocycle& b);
Cocycle cocycle_scale(const Cocycle& a, const Int& k);

// Cyclic <a>: N_a T(a) must land in M.  Klein <a,b>: both norm conditions
// plus the compatibility (a-1)T(b) = (b-1)T(a) in FM/M.
bool validate_cocycle(const Cocycle& T);

// T(g g') = g' T(g) + T(g'), matching the crystallographic group law.
CosetVector evaluate(const Cocycle& T, const GroupElement& g);

// Common witness x with T(g_i) = (g_i - 1) x + M for all generators, decided
// exactly; x is in lattice coordinates.
std::optional<RatVec> is_coboundary(const Cocycle& T);

bool cohomologous(const Cocycle& T1, const Cocycle& T2);

// Cocycle on restriction(L, h) with value evaluate(T, h).
Cocycle restrict_cocycle(const Cocycle& T, const GroupElement& h);

// g -> tau T(eps^{-1} g) on the same underlying lattice; tau must intertwine
// the eps-twist (action(eps(g)) tau == tau action(g)).
Cocycle push_cocycle(const Cocycle& T, const GroupAutomorphism& eps, const IntMatrix& tau);

class CohomologyResult {
public:
  const FiniteAbelianGroup& group_structure() const { return group_; }
  const std::vector<Cocycle>& representatives() const { return reps_; }
  const LatticePtr& lattice() const { return lattice_; }
  Int order() const { return group_.order(); }
  bool trivial() const { return group_.trivial(); }

  // Components of [T] against the invariant-factor decomposition; requires
  // the values of T to have denominators dividing |G|.
  std::vector<Int> class_of(const Cocycle& T) const;
  // Cocycle representing the class with the given components.
  Cocycle rep_for(const std::vector<Int>& components) const;
  // All |H1| classes as component tuples, in lexicographic order.
  std::vector<std::vector<Int>> all_classes() const;

private:
  friend CohomologyResult h1(LatticePtr L);
  LatticePtr lattice_;
  FiniteAbelianGroup group_;
  std::vector<Cocycle> reps_;
  IntMatrix z_basis_;          // HNF basis of the cocycle-tuple lattice Z1
  IntMatrix v_;                // SNF column transform of B1 in Z1 coordinates
  std::vector<Int> factors_;   // full diagonal, 1s included
};

CohomologyResult h1(LatticePtr L);
inline CohomologyResult h1(const GLattice& L) { return h1(std::make_shared<GLattice>(L)); }

}  // namespace crys
