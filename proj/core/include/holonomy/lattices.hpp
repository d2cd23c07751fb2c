#pragma once

#include <cstddef>
#include <vector>

#include "holonomy/characters.hpp"
#include "holonomy/groups.hpp"
#include "holonomy/intmat.hpp"

namespace holo {

// An integral G-action of finite rank: one GL(n,Z) matrix per group element,
// extended from the generator assignment and verified against the Cayley
// table.
class GLattice {
public:
  // One matrix per distinguished generator of the group.
  GLattice(GroupPtr g, std::size_t rank, std::vector<IntMatrix> generator_action);

  // One matrix per element (index-aligned with the group).
  static GLattice from_element_matrices(GroupPtr g, std::size_t rank,
                                        std::vector<IntMatrix> matrices);

  static GLattice trivial(GroupPtr g, std::size_t rank);

  const FiniteGroup& group() const { return *group_; }
  GroupPtr group_handle() const { return group_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& act(int element) const { return action_[element]; }

  bool faithful() const;

private:
  GLattice(GroupPtr g, std::size_t rank) : group_(g), rank_(rank) {}
  void verify() const;

  GroupPtr group_;
  std::size_t rank_;
  std::vector<IntMatrix> action_;
};

// Trace of the action at each class representative.
IntVec lattice_character(const GLattice& l);

// Decomposition of C (x) M into irreducible characters, with multiplicities.
std::vector<std::pair<std::size_t, std::uint64_t>> irr_constituents(
    const GLattice& l, const CharacterTable& t);

struct HomogeneityReport {
  bool homogeneous = false;
  std::size_t component_count = 0;
  std::vector<std::size_t> orbits_hit;  // indices into the orbit list
};

// Q-homogeneity via Galois-orbit counting (the fast route).
HomogeneityReport homogeneity_test(
    const GLattice& l, const CharacterTable& t,
    const std::vector<std::vector<std::size_t>>& orbits);

// Rank of the image of the rational central idempotent of one Galois orbit
// (the independent slow route; the orbit projector has rational entries).
std::size_t isotypic_rank(const GLattice& l, const CharacterTable& t,
                          const std::vector<std::size_t>& orbit);

// Saturated basis (rows) of the H-fixed points of the lattice.
IntMatrix fixed_sublattice(const GLattice& l, const Subgroup& h);

// The lattice restricted to a subgroup, as an action of the subgroup's own
// FiniteGroup; embed comes from subgroup_as_group.
GLattice restrict_lattice(const GLattice& l, GroupPtr h_group,
                          const std::vector<int>& embed);

// Direct sum, used by property tests.
GLattice direct_sum(const GLattice& a, const GLattice& b);

}  // namespace holo
