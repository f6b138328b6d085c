#pragma once
// Generalized crystallographic groups: elements (g, x), orders, torsion
// certificates, isomorphism testing and per-lattice classification.

#include "crys/cohomology.hpp"

namespace crys {

// x is in lattice coordinates and must represent the coset evaluate(T, g).
struct CrysElement {
  GroupElement g;
  RatVec x;
};

class CrysGroup {
public:
  explicit CrysGroup(Cocycle T);

  const Cocycle& cocycle() const { return cocycle_; }
  const LatticePtr& lattice() const { return cocycle_.lattice; }
  const PGroup& point_group() const { return cocycle_.lattice->group(); }

private:
  Cocycle cocycle_;
};

CrysElement crys_identity(const CrysGroup& C);
// Validates the membership x = evaluate(T, g) + M.
CrysElement crys_element(const CrysGroup& C, const GroupElement& g, RatVec x);
// (g, x)(g', x') = (gg', g'x + x').
CrysElement multiply(const CrysGroup& C, const CrysElement& e1, const CrysElement& e2);
// Finite order iff the norm sum of x vanishes exactly; nullopt = infinite.
std::optional<long> order_of(const CrysGroup& C, const CrysElement& e);

// Generators of the subgroups of prime order: one for cyclic groups,
// p+1 for klein groups.
std::vector<GroupElement> prime_order_subgroup_generators(const PGroup& G);

struct SubgroupCheck {
  GroupElement generator;
  bool vanishes = false;                 // restricted class is a coboundary
  std::vector<Int> restricted_class;     // components in H1 of the restriction
  std::optional<RatVec> witness_x;       // coboundary witness when vanishing
};

struct TorsionWitness {
  CrysElement element;
  long order = 0;
};

struct TorsionCertificate {
  bool torsion_free = false;
  std::vector<SubgroupCheck> checks;
  std::optional<TorsionWitness> witness;
};

// Torsion-free iff the restriction of the class to every prime-order
// subgroup is nonvanishing; otherwise returns an explicit torsion element.
TorsionCertificate is_torsion_free(const CrysGroup& C);

struct IsoWitness {
  GroupAutomorphism eps;
  IntMatrix tau;
  bool unimodular = false;  // det = +-1; otherwise det is only coprime to p
};

// Coefficient ring for invertibility of tau: localized at p (det coprime
// to p) or integral (det exactly +-1).
enum class IsoRing { LocalAtP, Integral };

// Over all automorphisms eps, find a unit intertwiner tau
// with [tau T1 eps^{-1}] = [T2].  Randomized part is seeded.
std::optional<IsoWitness> isomorphic(const CrysGroup& C1, const CrysGroup& C2,
                                     std::uint64_t budget = (std::uint64_t(1) << 20),
                                     std::uint64_t seed = 0,
                                     IsoRing ring = IsoRing::LocalAtP);

// The same search restricted to eps = identity: decides whether the two
// extensions are carried into each other by a unit self-intertwiner of the
// (common) action, i.e. isomorphism over G held pointwise fixed.
std::optional<IsoWitness> extension_equivalent(const CrysGroup& C1, const CrysGroup& C2,
                                               std::uint64_t budget = (std::uint64_t(1) << 20),
                                               std::uint64_t seed = 0,
                                               IsoRing ring = IsoRing::Integral);

struct ClassifyReport {
  FiniteAbelianGroup h1_structure;
  Int h1_order = 1;
  long torsion_free_classes = 0;                  // raw class count
  long iso_orbits = 0;                            // orbits under (eps, tau)
  std::vector<std::vector<Int>> orbit_representatives;  // one class tuple each
  std::vector<std::vector<Int>> torsion_free_class_list;
};

ClassifyReport classify(LatticePtr L, std::uint64_t budget = (std::uint64_t(1) << 20),
                        std::uint64_t seed = 0, IsoRing ring = IsoRing::LocalAtP);

}  // namespace crys
