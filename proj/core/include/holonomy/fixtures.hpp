#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/cohomology.hpp"
#include "holonomy/crystal.hpp"
#include "holonomy/groups.hpp"
#include "holonomy/kahler.hpp"

namespace holo {

enum class FixtureKind { abstract, affine, complex };

// Point-group spec, integral action, and an optional cocycle given flat in
// the deterministic element enumeration order.
struct AbstractFixture {
  std::vector<Generator> group_generators;
  std::size_t rank = 0;
  std::vector<IntMatrix> action;  // one matrix per group generator
  std::optional<Cochain2> cocycle;
};

struct AffineFixture {
  std::vector<AffinePair> generators;
};

struct ComplexFixture {
  unsigned field_order = 4;  // conductor of the entry field
  std::vector<ComplexAffine> generators;
};

// On-disk document: JSON with every numeric literal encoded as a decimal
// string, rationals as "p/q", complex entries as {"re","im"} Gaussian
// rationals.
struct FixtureDocument {
  int format_version = 1;
  std::string name;
  std::size_t dimension = 0;
  FixtureKind kind = FixtureKind::abstract;
  std::map<std::string, std::string> expected;

  std::optional<AbstractFixture> abstract_data;
  std::optional<AffineFixture> affine_data;
  std::optional<ComplexFixture> complex_data;
};

FixtureDocument parse_fixture(const std::string& text);
FixtureDocument load_fixture(const std::string& path);
// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string serialize_fixture(const FixtureDocument& doc);

// Shipped catalog, sorted by name.
std::vector<FixtureDocument> builtin_catalog();

// Catalog directory loader (files *.json, sorted by fixture name).
std::vector<FixtureDocument> load_catalog(const std::string& dir);

// String codecs shared with the CLI's machine output.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);
Int int_from_string(const std::string& s);

}  // namespace holo
