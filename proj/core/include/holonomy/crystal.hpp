#pragma once

#include <optional>
#include <vector>

#include "holonomy/cohomology.hpp"
#include "holonomy/groups.hpp"
#include "holonomy/lattices.hpp"
#include "holonomy/ratmat.hpp"

namespace holo {

// Affine transformation x -> A x + a in lattice coordinates; the linear part
// is rational and invertible, the translation rational.
struct AffinePair {
  RatMatrix linear;
  RatVec translation;
};

AffinePair affine_mul(const AffinePair& x, const AffinePair& y);
AffinePair affine_inverse(const AffinePair& x);
bool affine_eq(const AffinePair& x, const AffinePair& y);

// Crystallographic extension of the point group by the lattice, determined
// by a normalized 2-cocycle. Elements are pairs (m, g) with the law
// (m, g) (m', g') = (m + g m' + f(g,g'), g g').
class CrystalGroup {
public:
  CrystalGroup(GLattice l, Cochain2 f);  // validates the cocycle identity

  const GLattice& lattice() const { return lattice_; }
  const FiniteGroup& point_group() const { return lattice_.group(); }
  std::size_t rank() const { return lattice_.rank(); }
  const Cochain2& cocycle() const { return f_; }
  IntVec cocycle_value(int a, int b) const;

  struct Element {
    IntVec translation;
    int point = 0;
  };

  Element identity() const;
  Element mul(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element power(const Element& x, long k) const;
  bool is_identity(const Element& x) const;

private:
  GLattice lattice_;
  Cochain2 f_;
};

CrystalGroup build_extension(GLattice l, Cochain2 f);

// Rational vectors v_g with v_g + g v_h - v_{gh} = f(g,h) and v_1 = 0.
std::vector<RatVec> vector_system(const CrystalGroup& gamma);

struct TorsionWitness {
  CrystalGroup::Element element;
  int prime = 0;
};

// Brute-force search for an element of prime order, by iterating the group
// law over each prime-order class representative and solving the resulting
// norm equation over Z.
std::optional<TorsionWitness> torsion_search(const CrystalGroup& gamma);

bool is_bieberbach(const CrystalGroup& gamma);

struct ExtractedData {
  GroupPtr point_group;
  GLattice lattice;
  H2Group cohomology;
  H2Element cocycle_class;
  Cochain2 cocycle;
  RatMatrix lattice_basis;  // columns: ambient coordinates of the basis
};

// Recover (G, M, alpha) from affine generators: point group from the linear
// parts, translation lattice from discovered pure translations, cocycle from
// the minimal-word section.
ExtractedData extract_data(const std::vector<AffinePair>& generators,
                           std::size_t order_cap = 512,
                           std::size_t h2_cap = 16);

}  // namespace holo
