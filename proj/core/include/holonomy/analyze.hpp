#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/cohomology.hpp"
#include "holonomy/crystal.hpp"
#include "holonomy/fixtures.hpp"

namespace holo {

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  std::size_t order_cap = 512;
  std::size_t h2_cap = 16;
};

// Fixture turned into concrete objects: point group, lattice, cohomology,
// and the class of the fixture's cocycle.
struct Materialized {
  GroupPtr group;
  GLattice lattice;
  H2Group cohomology;
  H2Element cocycle_class;
  Cochain2 cocycle;
};

Materialized materialize(const FixtureDocument& doc,
                         const AnalyzeOptions& opts = {});

struct ConstituentReport {
  std::size_t table_row = 0;
  std::uint64_t degree = 0;
  std::uint64_t multiplicity = 0;
  std::vector<std::pair<std::uint64_t, bool>> principal_block;  // per prime
};

struct AnalysisReport {
  std::string name;
  std::size_t group_order = 0;
  std::string structure;
  std::size_t rank = 0;
  bool faithful = false;
  std::vector<ConstituentReport> constituents;
  std::size_t component_count = 0;  // Galois orbits hit
  bool homogeneous = false;
  std::vector<std::size_t> isotypic_ranks;  // per hit orbit, slow route
  std::vector<Int> h2_invariant_factors;
  bool special = false;       // cohomological route
  bool torsion_free = false;  // brute-force route
  bool verdicts_agree = false;
  std::optional<bool> socle_elementary_abelian;  // |G| > 1 only
  std::optional<std::size_t> c_components;       // complex fixtures only
  std::optional<bool> kahler_consistent;
};

// Full per-fixture analysis; throws Error(internal) when the two torsion
// routes or the two homogeneity routes disagree.
AnalysisReport analyze_fixture(const FixtureDocument& doc,
                               const AnalyzeOptions& opts = {});

struct TheoremRow {
  std::string name;
  bool bieberbach = false;
  bool nontrivial = false;
  bool homogeneous = false;
  std::size_t component_count = 0;
  // For homogeneous non-torus lattices: confirmed that no class is special.
  bool no_special_checked = false;
  bool no_special = false;
};

struct TheoremSummary {
  std::vector<TheoremRow> rows;
  bool pass = false;
};

// PASS iff no fixture is simultaneously Bieberbach, non-torus, and
// homogeneous.
TheoremSummary verify_theorem(const std::vector<FixtureDocument>& catalog,
                              const AnalyzeOptions& opts = {});

std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);
std::string summary_to_json(const TheoremSummary& s);
std::string summary_to_text(const TheoremSummary& s);

}  // namespace holo
