#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/intmat.hpp"

namespace holo {

// A generator is either a permutation of {0..N-1} or a matrix in GL(n,Z).
struct Generator {
  std::optional<std::vector<int>> perm;
  std::optional<IntMatrix> matrix;
};

struct GroupSpec {
  std::vector<Generator> generators;
  std::size_t order_cap = 512;
};

// Element-index subset of a FiniteGroup, sorted, always containing 0.
struct Subgroup {
  std::vector<int> elements;
  bool operator==(const Subgroup& other) const = default;
  auto operator<=>(const Subgroup& other) const = default;
  std::size_t order() const { return elements.size(); }
  bool contains(int e) const;
};

// Fully enumerated finite group. Index 0 is the identity.
class FiniteGroup {
public:
  // Takes a complete Cayley table (table[a][b] = a*b) with identity at 0,
  // plus the indices of the distinguished generators.
  FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<int> generators);

  std::size_t order() const { return cayley_.size(); }
  int mul(int a, int b) const { return cayley_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int power(int a, Int k) const;
  int element_order(int a) const { return element_order_[a]; }
  std::size_t exponent() const { return exponent_; }
  bool is_abelian() const;

  const std::vector<int>& generators() const { return generators_; }
  // Word in the distinguished generators evaluating to element a.
  std::vector<int> word(int a) const;

  std::size_t num_classes() const { return class_rep_.size(); }
  int class_of(int a) const { return class_of_[a]; }
  int class_rep(int c) const { return class_rep_[c]; }
  std::size_t class_size(int c) const { return class_members_[c].size(); }
  const std::vector<int>& class_members(int c) const {
    return class_members_[c];
  }
  // Class of rep(c)^k.
  int power_class(int c, Int k) const { return class_of_[power(class_rep_[c], k)]; }
  int inverse_class(int c) const { return class_of_[inv(class_rep_[c])]; }

  // --- subgroup machinery ---
  Subgroup whole_group() const;
  Subgroup trivial_subgroup() const { return Subgroup{{0}}; }
  Subgroup generated_subgroup(const std::vector<int>& gens) const;
  Subgroup conjugate_subgroup(const Subgroup& h, int g) const;
  bool is_normal(const Subgroup& h) const;
  Subgroup normal_closure(int e) const;
  Subgroup product_subgroup(const std::vector<Subgroup>& parts) const;

  bool is_cyclic(const Subgroup& h) const;
  bool is_elementary_abelian(const Subgroup& h) const;

  // One representative per conjugacy class of prime-order cyclic subgroups,
  // each paired with a generating element.
  std::vector<std::pair<Subgroup, int>> prime_order_subgroups() const;

  // All minimal normal subgroups; socle is their product. Throws on the
  // trivial group.
  std::vector<Subgroup> minimal_normal_subgroups() const;
  Subgroup socle() const;

  Subgroup sylow_subgroup(std::uint64_t p) const;

  Subgroup normalizer(const Subgroup& h) const;

  // Primes dividing the group order.
  std::vector<std::uint64_t> prime_divisors() const;

  // Short structural description, e.g. "order 4, abelian, exponent 2".
  std::string structure_summary() const;

private:
  std::vector<std::vector<int>> cayley_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<int> element_order_;
  std::size_t exponent_;
  std::vector<int> class_of_;
  std::vector<int> class_rep_;
  std::vector<std::vector<int>> class_members_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// BFS closure of the generators; throws Error(cap) past spec.order_cap.
// Enumeration order (and hence element indexing) is deterministic.
GroupPtr enumerate_elements(const GroupSpec& spec);

// The subgroup as a FiniteGroup of its own; embed[i] is the parent index of
// the subgroup's element i.
GroupPtr subgroup_as_group(const FiniteGroup& g, const Subgroup& h,
                           std::vector<int>& embed);

// Convenience constructors used by tests and fixtures.
GroupSpec cyclic_spec(int n);
GroupSpec symmetric3_spec();
GroupSpec klein_four_matrix_spec();

}  // namespace holo
