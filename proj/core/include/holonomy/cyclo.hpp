#pragma once

#include <cstdint>
#include <vector>

#include "holonomy/intmat.hpp"
#include "holonomy/ratmat.hpp"

namespace holo {

// Arithmetic in Z[zeta_e] and Q(zeta_e), power basis 1, zeta, ..., zeta^(phi-1)
// modulo the e-th cyclotomic polynomial.
struct CycField {
  unsigned order;   // e
  unsigned degree;  // phi(e)
  IntVec modulus;   // Phi_e, monic, length degree+1, low-to-high
};

CycField cyclotomic_field(unsigned e);

// Phi_e as an integer polynomial, low-to-high coefficients.
IntVec cyclotomic_polynomial(unsigned e);

using CycInt = IntVec;  // length F.degree
using CycRat = RatVec;

CycInt cyc_zero(const CycField& f);
CycInt cyc_one(const CycField& f);
// zeta^k reduced into the power basis.
CycInt cyc_root_power(const CycField& f, long k);

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_sub(const CycInt& a, const CycInt& b);
CycInt cyc_scale(const Int& c, const CycInt& a);
CycInt cyc_mul(const CycField& f, const CycInt& a, const CycInt& b);
// zeta -> zeta^(-1), i.e. complex conjugation.
CycInt cyc_conj(const CycField& f, const CycInt& a);
bool cyc_is_rational(const CycInt& a);  // only the constant coordinate nonzero

CycRat cycr_from_int(const CycInt& a);
CycRat cycr_add(const CycRat& a, const CycRat& b);
CycRat cycr_sub(const CycRat& a, const CycRat& b);
CycRat cycr_scale(const Rat& c, const CycRat& a);
CycRat cycr_mul(const CycField& f, const CycRat& a, const CycRat& b);
CycRat cycr_conj(const CycField& f, const CycRat& a);
bool cycr_is_zero(const CycRat& a);
bool cycr_is_rational(const CycRat& a);

// Reduction of a into F_ell by zeta -> root (a primitive e-th root of 1
// mod ell).
std::uint64_t cyc_reduce_mod(const CycField& f, const CycInt& a,
                             std::uint64_t root, std::uint64_t ell);

// Distinct irreducible factors of Phi_e modulo the prime p, each monic with
// low-to-high coefficients in [0,p), sorted lexicographically by that
// coefficient sequence.
std::vector<std::vector<std::uint64_t>> factor_cyclotomic_mod_p(
    unsigned e, std::uint64_t p);

}  // namespace holo
