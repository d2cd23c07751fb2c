#pragma once

#include <random>
#include <vector>

#include "holonomy/cohomology.hpp"
#include "holonomy/error.hpp"
#include "holonomy/groups.hpp"
#include "holonomy/intmat.hpp"
#include "holonomy/lattices.hpp"

namespace helpers {

using namespace holo;

// Quaternion group of order 8 as the left-regular permutation action on
// {1, i, -1, -i, j, k, -j, -k}.
inline GroupSpec q8_spec() {
  GroupSpec spec;
  spec.generators.push_back(
      Generator{std::vector<int>{1, 2, 3, 0, 5, 6, 7, 4}, std::nullopt});
  spec.generators.push_back(
      Generator{std::vector<int>{4, 7, 6, 5, 2, 1, 0, 3}, std::nullopt});
  return spec;
}

// Alternating group on 4 letters: (0 1)(2 3) and (0 1 2).
inline GroupSpec a4_spec() {
  GroupSpec spec;
  spec.generators.push_back(
      Generator{std::vector<int>{1, 0, 3, 2}, std::nullopt});
  spec.generators.push_back(
      Generator{std::vector<int>{1, 2, 0, 3}, std::nullopt});
  return spec;
}

inline IntMatrix random_small_matrix(std::mt19937_64& rng, std::size_t rows,
                                     std::size_t cols, int lo = -9,
                                     int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

// Product of random elementary row operations applied to the identity.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n,
                                   int ops = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int t = 0; t < ops; ++t) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    u.add_row(i, j, Int(coef(rng)));
  }
  return u;
}

// Companion matrix of x^d - 1: integral, determinant +-1, multiplicative
// order exactly d.
inline IntMatrix cyclic_shift_block(std::size_t d) {
  IntMatrix m(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) m.at(i + 1, i) = 1;
  m.at(0, d - 1) = 1;
  return m;
}

// Random rank <= max_rank lattice for the cyclic group of order n: a
// conjugated direct sum of cyclic shift blocks with sizes dividing n.
inline GLattice random_cyclic_lattice(GroupPtr c_n, int n,
                                      std::size_t max_rank,
                                      std::mt19937_64& rng) {
  std::vector<std::size_t> divisors;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(static_cast<std::size_t>(d));
  std::uniform_int_distribution<std::size_t> pick(0, divisors.size() - 1);
  std::vector<std::size_t> blocks;
  std::size_t total = 0;
  while (true) {
    std::size_t d = divisors[pick(rng)];
    if (total + d > max_rank) {
      if (total >= 1) break;
      continue;
    }
    blocks.push_back(d);
    total += d;
    if (total == max_rank) break;
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0 && total >= 1)
      break;
  }
  IntMatrix a(total, total);
  std::size_t off = 0;
  for (std::size_t d : blocks) {
    IntMatrix b = cyclic_shift_block(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) a.at(off + i, off + j) = b.at(i, j);
    off += d;
  }
  IntMatrix p = random_unimodular(rng, total);
  IntMatrix conj = p * a * unimodular_inverse(p);
  std::vector<IntMatrix> action(c_n->generators().size(), conj);
  return GLattice(c_n, total, action);
}

// All homomorphic assignments of diagonal +-1 matrices of the given rank to
// the group's generators (invalid assignments are skipped), plus the
// supplied extra lattices.
inline std::vector<GLattice> diagonal_lattices(GroupPtr g, std::size_t rank) {
  std::size_t k = g->generators().size();
  std::vector<GLattice> out;
  std::size_t total = 1;
  for (std::size_t t = 0; t < k * rank; ++t) total *= 2;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<IntMatrix> action;
    std::size_t bits = code;
    for (std::size_t gi = 0; gi < k; ++gi) {
      IntVec d(rank);
      for (std::size_t r = 0; r < rank; ++r) {
        d[r] = (bits & 1) ? -1 : 1;
        bits >>= 1;
      }
      action.push_back(IntMatrix::diagonal(d));
    }
    try {
      out.emplace_back(g, rank, action);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::validation) throw;
    }
  }
  return out;
}

struct MatrixEntry {
  GroupPtr group;
  std::vector<GLattice> lattices;
};

// The (G, L) test matrix: {C2, C3, C4, C2xC2, S3} x {diagonal +-1 actions of
// ranks 1..4, plus the C3/C4 rotation actions}.
inline std::vector<MatrixEntry> test_matrix() {
  std::vector<MatrixEntry> entries;
  auto add = [&](GroupSpec spec) {
    MatrixEntry e;
    e.group = enumerate_elements(spec);
    for (std::size_t r = 1; r <= 4; ++r) {
      auto ds = diagonal_lattices(e.group, r);
      for (auto& l : ds) e.lattices.push_back(std::move(l));
    }
    entries.push_back(std::move(e));
  };
  add(cyclic_spec(2));
  add(cyclic_spec(3));
  add(cyclic_spec(4));
  add(klein_four_matrix_spec());
  add(symmetric3_spec());

  entries[1].lattices.emplace_back(
      entries[1].group, 2,
      std::vector<IntMatrix>{IntMatrix::from_rows({{0, -1}, {1, -1}})});
  entries[2].lattices.emplace_back(
      entries[2].group, 2,
      std::vector<IntMatrix>{IntMatrix::from_rows({{0, -1}, {1, 0}})});
  return entries;
}

}  // namespace helpers
