#pragma once
// ZG-lattices: integral representations of finite p-groups, sublattice spans
// inside ambient free modules, restriction / contragredient / twist,
// endomorphism and intertwiner lattices, indecomposability and C_p
// decomposition multiplicities.

#include "crys/groupcore.hpp"

#include <cstdint>
#include <optional>

namespace crys {

// Embedding data kept when a lattice is built as a sublattice of an ambient
// module: basis rows are the lattice basis in ambient coordinates.
struct AmbientEmbedding {
  int ambient_rank = 0;
  IntMatrix basis;                       // rank x ambient_rank, HNF rows
  std::vector<IntMatrix> ambient_action; // one per group generator
};

class GLattice {
public:
  // action: one matrix per generator (1 for cyclic, 2 for klein), acting on
  // column vectors.  Validates the group relations and unimodularity.
  GLattice(PGroup group, std::vector<IntMatrix> action,
           std::optional<AmbientEmbedding> embedding = std::nullopt);

  const PGroup& group() const { return group_; }
  int rank() const { return rank_; }
  const std::vector<IntMatrix>& action() const { return action_; }
  const IntMatrix& action_a() const { return action_[0]; }
  const IntMatrix& action_b() const { return action_[1]; }
  const std::optional<AmbientEmbedding>& embedding() const { return embedding_; }

  // Action matrix of an arbitrary group element.
  IntMatrix action_of(const GroupElement& g) const;
  // N_g = sum of action(g)^k over k < ord(g).
  IntMatrix norm_matrix(const GroupElement& g) const;

  // Coordinates of an ambient vector in the lattice basis (requires the
  // embedding); exact, throws if the vector is outside Q-span of the lattice.
  RatVec ambient_to_coords(const RatVec& ambient) const;

  bool operator==(const GLattice& o) const {
    return group_ == o.group_ && action_ == o.action_;
  }

private:
  PGroup group_;
  int rank_;
  std::vector<IntMatrix> action_;
  std::optional<AmbientEmbedding> embedding_;
};

// The regular lattice ZG with the dense coefficient basis.
GLattice regular_lattice(const PGroup& G);

// Free module (ZG)^copies with the block-diagonal regular action.
GLattice free_module(const PGroup& G, int copies);

// Closes the generator vectors (ambient coordinates) under the group action
// and returns the spanned sublattice with its induced action and embedding.
GLattice sublattice_span(const GLattice& ambient, const std::vector<std::vector<Int>>& generators);

// Restriction to the cyclic subgroup generated by h (h nontrivial).
GLattice restriction(const GLattice& L, const GroupElement& h);

GLattice contragredient(const GLattice& L);

// Twisted module: action(g) of the twist is action(eps(g)) of L.
GLattice twist(const GLattice& L, const GroupAutomorphism& eps);

using EndoBasis = std::vector<IntMatrix>;  // saturated Z-basis of a matrix lattice

EndoBasis endomorphism_ring(const GLattice& L);

// Saturated basis of {tau : action2(eps(g)) * tau = tau * action1(g)}.
EndoBasis intertwiner_lattice(const GLattice& L1, const GLattice& L2, const GroupAutomorphism& eps);

enum class Decomposability : std::uint8_t { Indecomposable, Decomposable, Unknown };

struct IndecomposabilityResult {
  Decomposability verdict;
  std::optional<IntMatrix> idempotent;  // mod-p witness when Decomposable
};

// Mod-p idempotent search over the endomorphism ring; "Indecomposable" means
// indecomposable over Z_(p) (hence over Z for these lattices).
IndecomposabilityResult is_indecomposable(const GLattice& L, std::uint64_t budget = (std::uint64_t(1) << 20));

struct CpMultiplicities {
  long trivial = 0;    // gamma_0 summands
  long cyclotomic = 0; // rank p-1 summands
  long regular = 0;    // free summands
};

// Decomposition multiplicities of a C_p-lattice into trivial, cyclotomic and
// regular summands, via Tate cohomology ranks.
CpMultiplicities cp_decomposition_multiplicities(const GLattice& L);

// Searches F_p-combinations of the basis for tau with det coprime to p.
// Exhaustive while p^(basis size) <= budget, then seeded randomized trials.
// unimodular is set when the returned tau even has det = +-1.
struct UnitIntertwiner {
  IntMatrix tau;
  bool unimodular = false;
};
std::optional<UnitIntertwiner> find_unit_intertwiner(const EndoBasis& basis, long p,
                                                     std::uint64_t budget = (std::uint64_t(1) << 20),
                                                     std::uint64_t seed = 0,
                                                     int random_trials = 512);

}  // namespace crys
