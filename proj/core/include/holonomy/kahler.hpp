#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "holonomy/crystal.hpp"
#include "holonomy/cyclo.hpp"
#include "holonomy/groups.hpp"
#include "holonomy/lattices.hpp"
#include "holonomy/ratmat.hpp"

namespace holo {

// Matrix with entries in Q(zeta_e), row-major; the field travels separately.
struct CycMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<CycRat> entries;

  CycRat& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const CycRat& at(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }
};

CycMatrix cyc_mat_zero(const CycField& f, std::size_t rows, std::size_t cols);
CycMatrix cyc_mat_identity(const CycField& f, std::size_t n);
CycMatrix cyc_mat_mul(const CycField& f, const CycMatrix& a,
                      const CycMatrix& b);
bool cyc_mat_eq(const CycMatrix& a, const CycMatrix& b);
CycRat cyc_mat_trace(const CycField& f, const CycMatrix& a);

// Complex affine transformation z -> A z + a with exact cyclotomic entries.
struct ComplexAffine {
  CycMatrix linear;
  std::vector<CycRat> translation;
};

ComplexAffine complex_affine_mul(const CycField& f, const ComplexAffine& x,
                                 const ComplexAffine& y);

// Re z and Im z as exact rationals. Only Gaussian-rational values qualify;
// anything else throws Error(validation).
std::pair<Rat, Rat> cyc_real_imag(const CycField& f, const CycRat& z);

// The doubling map B: linear part [[Re A, -Im A], [Im A, Re A]], translation
// (Re a, Im a). A multiplicative homomorphism on affine pairs.
RatMatrix realify_matrix(const CycField& f, const CycMatrix& a);
AffinePair realify_affine(const CycField& f, const ComplexAffine& x);

// phi: G -> GL(n, C) with one matrix per group element, index-aligned.
struct ComplexRep {
  GroupPtr group;
  CycField field;
  std::size_t degree = 0;
  std::vector<CycMatrix> matrices;
};

// Extends a generator assignment along the Cayley table and verifies the
// homomorphism property.
ComplexRep complex_rep(GroupPtr g, const CycField& f, std::size_t degree,
                       const std::vector<CycMatrix>& gen_images);

ComplexRep direct_sum(const ComplexRep& a, const ComplexRep& b);

struct RealifiedRep {
  GroupPtr group;
  std::size_t degree = 0;  // 2n
  std::vector<RatMatrix> matrices;
};

RealifiedRep realify_rep(const ComplexRep& phi);

// Trace of phi at each class representative.
std::vector<CycRat> complex_character(const ComplexRep& phi);

// Number of distinct irreducible complex constituents of phi.
std::size_t c_homogeneity(const ComplexRep& phi, std::uint64_t seed = 0);

struct KahlerVerdict {
  std::size_t group_order = 0;
  std::size_t c_components = 0;
  HomogeneityReport real_report;
  // c_components == 1 forces the realified lattice to be homogeneous.
  bool consistent = false;
  // Trivial holonomy, or both component counts are >= 2.
  bool theorem_holds = false;
};

// Realifies the generators, recovers the crystallographic data, rejects
// groups with torsion, and compares the complex and rational component
// counts.
KahlerVerdict kahler_theorem_check(const CycField& f,
                                   const std::vector<ComplexAffine>& gens,
                                   std::size_t order_cap = 512,
                                   std::size_t h2_cap = 16,
                                   std::uint64_t seed = 0);

}  // namespace holo
