#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "holonomy/cyclo.hpp"
#include "holonomy/groups.hpp"

namespace holo {

// Class-algebra structure constants a[i][j][k] = #{(x,y) in Ci x Cj : xy = zk}.
std::vector<std::vector<std::vector<std::uint64_t>>> class_algebra(
    const FiniteGroup& g);

// Complex character table computed mod a prime ell with ell = 1 (mod e) and
// ell > 2|G| (Dixon-Burnside). Values are residues; degrees are exact
// integers. Rows are sorted by (degree, values), trivial character first.
struct CharacterTable {
  GroupPtr group;
  std::uint64_t ell = 0;
  std::uint64_t root = 0;        // primitive e-th root of unity mod ell
  std::uint64_t root_order = 0;  // e = exponent of the group
  std::uint64_t big_root = 0;    // primitive big_order-th root; root is a
                                 // power of it, so external cyclotomic data
                                 // of conductor dividing big_order embeds
                                 // consistently
  std::uint64_t big_order = 0;   // lcm(e, root_multiple)
  std::vector<std::vector<std::uint64_t>> rows;  // [row][class]
  std::vector<std::uint64_t> degrees;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t trivial_row() const;
};

// root_multiple forces e * k | ell - 1 so externally supplied cyclotomic
// values of that conductor can be reduced into the same field. min_prime
// raises ell beyond its 2|G| default; needed when decomposing class
// functions whose multiplicities may reach that size (e.g. lattice
// characters of rank >= ell).
CharacterTable character_table(const FiniteGroup& g, GroupPtr handle,
                               std::uint64_t seed = 0,
                               std::uint64_t root_multiple = 1,
                               std::uint64_t min_prime = 0);
CharacterTable character_table(GroupPtr g, std::uint64_t seed = 0,
                               std::uint64_t root_multiple = 1,
                               std::uint64_t min_prime = 0);

// Orbits of chi -> chi o (g -> g^k), gcd(k, e) = 1. Indexes the simple
// components of QG; a Q-homogeneous lattice meets exactly one orbit.
std::vector<std::vector<std::size_t>> galois_orbits(const CharacterTable& t);

// Decomposition of an integer-valued class function (one value per class)
// that is the character of an integral representation.
std::vector<std::pair<std::size_t, std::uint64_t>> multiplicities(
    const CharacterTable& t, const IntVec& class_fn);

// Same, for values already reduced mod ell; degree check against `degree`.
std::vector<std::pair<std::size_t, std::uint64_t>> multiplicities_modl(
    const CharacterTable& t, const std::vector<std::uint64_t>& values,
    const Int& degree);

// Eigenvalue multiplicities n_j of rho(g): chi(g^k) = sum_j n_j w_m^(jk),
// m = order of g. Recovered exactly from the mod-ell values.
std::vector<Int> eigenvalue_multiplicities(const CharacterTable& t,
                                           std::size_t row, int element);

// Exact value of the character at each class, in Z[zeta_e].
std::vector<CycInt> lift_to_cyclotomic(const CharacterTable& t,
                                       std::size_t row);

// Decomposition of row |G restricted to the subgroup H with its own table.
// embed[i] = parent index of t_h.group element i.
std::vector<std::pair<std::size_t, std::uint64_t>> restrict_character(
    const CharacterTable& t_g, const CharacterTable& t_h,
    const std::vector<int>& embed, std::size_t row);

// Central-character congruence test for membership in the principal p-block.
bool principal_block_test(const CharacterTable& t, std::size_t row,
                          std::uint64_t p);

}  // namespace holo
