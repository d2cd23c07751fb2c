#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "holonomy/analyze.hpp"
#include "holonomy/characters.hpp"
#include "holonomy/error.hpp"
#include "holonomy/fixtures.hpp"
#include "holonomy/kahler.hpp"

namespace {

using holo::AnalyzeOptions;
using holo::FixtureDocument;
using nlohmann::json;

struct CommonArgs {
  std::string format = "human";
  std::uint64_t seed = 0;
  std::size_t max_order = 512;
  std::size_t max_h2_order = 16;

  bool machine() const { return format == "machine"; }
  AnalyzeOptions options() const {
    return AnalyzeOptions{seed, max_order, max_h2_order};
  }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  cmd->add_option("--seed", args.seed, "Character-table seed")
      ->capture_default_str();
  cmd->add_option("--max-order", args.max_order, "Group order cap")
      ->capture_default_str();
  cmd->add_option("--max-h2-order", args.max_h2_order,
                  "Cohomology group-order cap")
      ->capture_default_str();
}

holo::GroupPtr named_or_fixture_group(const std::string& target,
                                      const AnalyzeOptions& opts) {
  holo::GroupSpec spec;
  if (target == "s3") {
    spec = holo::symmetric3_spec();
  } else if (target == "klein") {
    spec = holo::klein_four_matrix_spec();
  } else if (target.size() > 1 && target[0] == 'c') {
    int n = std::stoi(target.substr(1));
    holo::check(n >= 1, holo::ErrorKind::parse, "bad cyclic order");
    spec = holo::cyclic_spec(n);
  } else {
    return holo::materialize(holo::load_fixture(target), opts).group;
  }
  spec.order_cap = opts.order_cap;
  return holo::enumerate_elements(spec);
}

std::string h2_human(const std::vector<holo::Int>& factors) {
  if (factors.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + factors[i].get_str();
  }
  return out;
}

int cmd_analyze(const std::string& path, const CommonArgs& args) {
  holo::AnalysisReport r =
      holo::analyze_fixture(holo::load_fixture(path), args.options());
  std::cout << (args.machine() ? holo::report_to_json(r)
                               : holo::report_to_text(r));
  return 0;
}

int cmd_verify_theorem(const std::string& dir, const CommonArgs& args) {
  std::vector<FixtureDocument> catalog =
      dir.empty() ? holo::builtin_catalog() : holo::load_catalog(dir);
  holo::TheoremSummary s = holo::verify_theorem(catalog, args.options());
  std::cout << (args.machine() ? holo::summary_to_json(s)
                               : holo::summary_to_text(s));
  return s.pass ? 0 : 3;
}

int cmd_h2(const std::string& path, const CommonArgs& args) {
  holo::Materialized m =
      holo::materialize(holo::load_fixture(path), args.options());
  std::vector<holo::Int> factors = m.cohomology.invariant_factors();
  if (args.machine()) {
    json inv = json::array();
    for (const holo::Int& d : factors) inv.push_back(d.get_str());
    json j{{"invariant_factors", std::move(inv)},
           {"order", m.cohomology.order().get_str()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "H^2 = " << h2_human(factors) << " (order "
              << m.cohomology.order().get_str() << ")\n";
  }
  return 0;
}

int cmd_special(const std::string& path, const CommonArgs& args) {
  holo::Materialized m =
      holo::materialize(holo::load_fixture(path), args.options());
  bool special = holo::is_special(m.cohomology, m.cocycle_class);
  if (args.machine()) {
    json inv = json::array();
    for (const holo::Int& d : m.cohomology.invariant_factors())
      inv.push_back(d.get_str());
    json j{{"h2_invariant_factors", std::move(inv)}, {"special", special}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "H^2 = " << h2_human(m.cohomology.invariant_factors())
              << "\n";
    std::cout << "cocycle class is "
              << (special ? "special (torsion-free extension)"
                          : "not special (extension has torsion)")
              << "\n";
  }
  return 0;
}

int cmd_torsion(const std::string& path, const CommonArgs& args) {
  holo::Materialized m =
      holo::materialize(holo::load_fixture(path), args.options());
  bool special = holo::is_special(m.cohomology, m.cocycle_class);
  holo::CrystalGroup gamma = holo::build_extension(m.lattice, m.cocycle);
  auto witness = holo::torsion_search(gamma);
  bool torsion_free = !witness.has_value();
  if (args.machine()) {
    json j{{"agree", special == torsion_free},
           {"cohomological_torsion_free", special},
           {"search_torsion_free", torsion_free}};
    if (witness) j["witness_prime"] = std::to_string(witness->prime);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cohomological route: "
              << (special ? "torsion-free" : "torsion") << "\n";
    std::cout << "brute-force search: "
              << (torsion_free ? "torsion-free" : "torsion") << "\n";
    if (witness)
      std::cout << "witness of order " << witness->prime << " found\n";
  }
  holo::check_internal(special == torsion_free,
                       "torsion verdicts disagree; this is a bug");
  return 0;
}

int cmd_chartable(const std::string& target, const CommonArgs& args) {
  holo::GroupPtr g = named_or_fixture_group(target, args.options());
  holo::CharacterTable t = holo::character_table(g, args.seed);
  if (args.machine()) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r = json::array();
      for (std::uint64_t v : row) r.push_back(std::to_string(v));
      rows.push_back(std::move(r));
    }
    json degrees = json::array();
    for (std::uint64_t d : t.degrees) degrees.push_back(std::to_string(d));
    json sizes = json::array();
    for (std::size_t c = 0; c < g->num_classes(); ++c)
      sizes.push_back(std::to_string(g->class_size(static_cast<int>(c))));
    json j{{"class_sizes", std::move(sizes)},
           {"degrees", std::move(degrees)},
           {"ell", std::to_string(t.ell)},
           {"group_order", std::to_string(g->order())},
           {"rows", std::move(rows)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group of order " << g->order() << ", " << g->num_classes()
              << " classes, values mod ell = " << t.ell << "\n";
    std::cout << "class sizes:";
    for (std::size_t c = 0; c < g->num_classes(); ++c)
      std::cout << " " << g->class_size(static_cast<int>(c));
    std::cout << "\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      std::cout << "chi[" << i << "] (deg " << t.degrees[i] << "):";
      for (std::uint64_t v : t.rows[i]) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_realify(const std::string& path, const CommonArgs& args) {
  FixtureDocument doc = holo::load_fixture(path);
  holo::check(doc.kind == holo::FixtureKind::complex,
              holo::ErrorKind::validation,
              "realify expects a complex fixture");
  holo::Materialized m = holo::materialize(doc, args.options());

  FixtureDocument out;
  out.name = doc.name + "-realified";
  out.dimension = m.lattice.rank();
  out.kind = holo::FixtureKind::abstract;
  holo::AbstractFixture fx;
  for (int gi : m.group->generators())
    fx.group_generators.push_back(
        holo::Generator{std::nullopt, m.lattice.act(gi)});
  fx.rank = m.lattice.rank();
  for (int gi : m.group->generators()) fx.action.push_back(m.lattice.act(gi));
  fx.cocycle = m.cocycle;
  out.abstract_data = std::move(fx);
  std::cout << holo::serialize_fixture(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomy toolkit: integral representations, group "
               "cohomology, and crystallographic extensions"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string path, dir, target;

  CLI::App* analyze = app.add_subcommand("analyze", "Full fixture analysis");
  analyze->add_option("fixture", path, "Fixture file")->required();
  add_common(analyze, args);

  CLI::App* verify = app.add_subcommand(
      "verify-theorem", "Check the homogeneity theorem over a catalog");
  verify->add_option("catalog", dir, "Catalog directory (default: built-in)");
  add_common(verify, args);

  CLI::App* h2cmd = app.add_subcommand("h2", "Second cohomology of a fixture");
  h2cmd->add_option("fixture", path, "Fixture file")->required();
  add_common(h2cmd, args);

  CLI::App* special =
      app.add_subcommand("special", "Special-class test for a fixture");
  special->add_option("fixture", path, "Fixture file")->required();
  add_common(special, args);

  CLI::App* torsion = app.add_subcommand(
      "torsion", "Torsion test, cohomological and brute-force");
  torsion->add_option("fixture", path, "Fixture file")->required();
  add_common(torsion, args);

  CLI::App* chartable =
      app.add_subcommand("chartable", "Character table of a group");
  chartable
      ->add_option("group", target,
                   "Fixture file or named group (cN, klein, s3)")
      ->required();
  add_common(chartable, args);

  CLI::App* realify = app.add_subcommand(
      "realify", "Emit the realified lattice of a complex fixture");
  realify->add_option("fixture", path, "Complex fixture file")->required();
  add_common(realify, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, args);
    if (verify->parsed()) return cmd_verify_theorem(dir, args);
    if (h2cmd->parsed()) return cmd_h2(path, args);
    if (special->parsed()) return cmd_special(path, args);
    if (torsion->parsed()) return cmd_torsion(path, args);
    if (chartable->parsed()) return cmd_chartable(target, args);
    if (realify->parsed()) return cmd_realify(path, args);
  } catch (const holo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 2;
}
