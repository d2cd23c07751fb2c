#pragma once

#include <cstddef>
#include <vector>

#include "holonomy/groups.hpp"
#include "holonomy/intmat.hpp"
#include "holonomy/lattices.hpp"

namespace holo {

// Normalized 2-cochain with values in the lattice: a flat vector indexed by
// pairs of non-identity elements, length (|G|-1)^2 * n.
using Cochain2 = IntVec;

std::size_t cochain2_size(const FiniteGroup& g, std::size_t rank);
// Value f(a,b) as a rank-length vector; zero when either argument is the
// identity.
IntVec cochain2_value(const Cochain2& f, const FiniteGroup& g,
                      std::size_t rank, int a, int b);
void cochain2_set(Cochain2& f, const FiniteGroup& g, std::size_t rank, int a,
                  int b, const IntVec& value);

bool is_cocycle(const Cochain2& f, const GLattice& l);

struct CoboundaryMatrices {
  IntMatrix d1;  // C^1 -> C^2
  IntMatrix d2;  // C^2 -> C^3
};

CoboundaryMatrices coboundary_matrices(const GLattice& l,
                                       std::size_t cap = 16);

// Element of H^2 in coordinates of the invariant-factor decomposition.
struct H2Element {
  IntVec coords;
  bool operator==(const H2Element& other) const = default;
};

// H^2(G, M) = ker d2 / im d1, presented by Smith invariant factors. Finite
// for every finite group; a free part signals an arithmetic bug.
class H2Group {
public:
  H2Group(GLattice l, std::size_t cap = 16);

  const GLattice& lattice() const { return lattice_; }
  const FiniteGroup& group() const { return lattice_.group(); }

  // Invariant factors > 1 (the nontrivial part of the presentation).
  IntVec invariant_factors() const;
  Int order() const;
  bool is_trivial_group() const { return order() == 1; }

  H2Element zero() const;
  bool is_zero(const H2Element& a) const;
  H2Element add(const H2Element& a, const H2Element& b) const;
  H2Element scale(const Int& k, const H2Element& a) const;

  // Class of a cocycle; throws Error(validation) when f is not a cocycle.
  H2Element reduce(const Cochain2& f) const;
  Cochain2 lift(const H2Element& a) const;

  std::vector<H2Element> all_elements() const;

private:
  GLattice lattice_;
  IntMatrix kernel_;       // rows: basis of ker d2
  IntMatrix u_, u_inv_;    // from the Smith form of the coboundary coords
  IntVec factors_;         // full diagonal, one entry per kernel basis vector
};

H2Group h2(const GLattice& l, std::size_t cap = 16);

// Closed-form H^2 for a cyclic group: M^C / N_C M with N_C the norm.
struct CyclicH2 {
  IntMatrix fixed_basis;   // rows: saturated basis of M^C
  IntMatrix u;             // Smith U of the norm-image coordinate matrix
  IntVec factors;          // full diagonal, one entry per fixed basis vector
  IntVec invariant_factors() const;  // entries > 1
  // Class coordinates of an element of M^C (given in lattice coordinates).
  IntVec reduce(const IntVec& t) const;
  bool is_zero_class(const IntVec& t) const;
};

CyclicH2 h2_cyclic(const GLattice& l);  // throws when the group is not cyclic

// Restriction of a class along a subgroup embedding, reduced in the
// subgroup's own H^2 (built over restrict_lattice with the same embed).
H2Element restrict_class(const H2Group& h2_g, const H2Element& a,
                         const H2Group& h2_h, const std::vector<int>& embed);

// Fast route for cyclic subgroups: the comparison map sends f to
// sum_i f(c^i, c) in M^C / N M.
IntVec cyclic_restriction_obstruction(const GLattice& l, const Cochain2& f,
                                      int c);
bool cyclic_restriction_vanishes(const GLattice& l, const Cochain2& f, int c);

// True iff the restriction of a to every prime-order subgroup is nonzero.
bool is_special(const H2Group& h2_g, const H2Element& a);

struct TrivialConstituentVerdict {
  bool h2_nonzero = false;
  std::size_t fixed_rank = 0;
  bool vacuous = false;  // H^2 = 0, nothing to check
};

// For cyclic C with H^2(C,M) != 0 the fixed sublattice must have rank >= 1;
// a violation is an internal error, the mathematics guarantees it.
TrivialConstituentVerdict trivial_constituent_check(const GLattice& l);

}  // namespace holo
