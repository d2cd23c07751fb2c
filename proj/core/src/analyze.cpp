#include "holonomy/analyze.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "holonomy/characters.hpp"
#include "holonomy/error.hpp"
#include "holonomy/kahler.hpp"

namespace holo {

using nlohmann::json;

namespace {

Materialized from_affine(const std::vector<AffinePair>& gens,
                         const AnalyzeOptions& opts) {
  ExtractedData data = extract_data(gens, opts.order_cap, opts.h2_cap);
  return Materialized{data.point_group, std::move(data.lattice),
                      std::move(data.cohomology),
                      std::move(data.cocycle_class), std::move(data.cocycle)};
}

}  // namespace

Materialized materialize(const FixtureDocument& doc,
                         const AnalyzeOptions& opts) {
  switch (doc.kind) {
    case FixtureKind::abstract: {
      const AbstractFixture& fx = *doc.abstract_data;
      GroupPtr g =
          enumerate_elements(GroupSpec{fx.group_generators, opts.order_cap});
      GLattice lattice(g, fx.rank, fx.action);
      Cochain2 f = fx.cocycle ? *fx.cocycle
                              : Cochain2(cochain2_size(*g, fx.rank), Int(0));
      check(f.size() == cochain2_size(*g, fx.rank), ErrorKind::validation,
            "cocycle has the wrong length for the group and rank");
      H2Group h(lattice, opts.h2_cap);
      H2Element a = h.reduce(f);
      return Materialized{g, std::move(lattice), std::move(h), std::move(a),
                          std::move(f)};
    }
    case FixtureKind::affine:
      return from_affine(doc.affine_data->generators, opts);
    case FixtureKind::complex: {
      const ComplexFixture& fx = *doc.complex_data;
      CycField f = cyclotomic_field(fx.field_order);
      std::vector<AffinePair> real_gens;
      real_gens.reserve(fx.generators.size());
      for (const ComplexAffine& g : fx.generators)
        real_gens.push_back(realify_affine(f, g));
      return Materialized{from_affine(real_gens, opts)};
    }
  }
  throw Error(ErrorKind::internal, "unreachable fixture kind");
}

AnalysisReport analyze_fixture(const FixtureDocument& doc,
                               const AnalyzeOptions& opts) {
  Materialized m = materialize(doc, opts);
  const FiniteGroup& g = *m.group;

  AnalysisReport r;
  r.name = doc.name;
  r.group_order = g.order();
  r.structure = g.structure_summary();
  r.rank = m.lattice.rank();
  r.faithful = m.lattice.faithful();

  CharacterTable t = character_table(m.group, opts.seed, 1, r.rank);
  auto orbits = galois_orbits(t);
  auto constituents = irr_constituents(m.lattice, t);
  std::vector<std::uint64_t> primes = g.prime_divisors();
  for (const auto& [row, mult] : constituents) {
    ConstituentReport c;
    c.table_row = row;
    c.degree = t.degrees[row];
    c.multiplicity = mult;
    for (std::uint64_t p : primes)
      c.principal_block.emplace_back(p, principal_block_test(t, row, p));
    r.constituents.push_back(std::move(c));
  }

  HomogeneityReport hr = homogeneity_test(m.lattice, t, orbits);
  r.component_count = hr.component_count;
  r.homogeneous = hr.homogeneous;
  std::size_t rank_sum = 0, positive = 0;
  for (std::size_t oi : hr.orbits_hit) {
    std::size_t ir = isotypic_rank(m.lattice, t, orbits[oi]);
    r.isotypic_ranks.push_back(ir);
    rank_sum += ir;
    if (ir > 0) ++positive;
  }
  check_internal(positive == hr.component_count && rank_sum == r.rank,
                 "homogeneity routes disagree");

  r.h2_invariant_factors = m.cohomology.invariant_factors();
  r.special = is_special(m.cohomology, m.cocycle_class);
  CrystalGroup gamma = build_extension(m.lattice, m.cocycle);
  r.torsion_free = !torsion_search(gamma).has_value();
  r.verdicts_agree = r.special == r.torsion_free;
  check_internal(r.verdicts_agree, "torsion routes disagree");

  if (g.order() > 1)
    r.socle_elementary_abelian = [&] {
      for (const Subgroup& n : g.minimal_normal_subgroups())
        if (!g.is_elementary_abelian(n)) return false;
      return true;
    }();

  if (doc.kind == FixtureKind::complex) {
    const ComplexFixture& fx = *doc.complex_data;
    CycField f = cyclotomic_field(fx.field_order);
    KahlerVerdict v = kahler_theorem_check(f, fx.generators, opts.order_cap,
                                           opts.h2_cap, opts.seed);
    r.c_components = v.c_components;
    r.kahler_consistent = v.consistent;
  }
  return r;
}

TheoremSummary verify_theorem(const std::vector<FixtureDocument>& catalog,
                              const AnalyzeOptions& opts) {
  TheoremSummary s;
  s.pass = true;
  for (const FixtureDocument& doc : catalog) {
    Materialized m = materialize(doc, opts);
    TheoremRow row;
    row.name = doc.name;
    row.nontrivial = m.group->order() > 1;

    CharacterTable t =
        character_table(m.group, opts.seed, 1, m.lattice.rank());
    HomogeneityReport hr =
        homogeneity_test(m.lattice, t, galois_orbits(t));
    row.homogeneous = hr.homogeneous;
    row.component_count = hr.component_count;

    CrystalGroup gamma = build_extension(m.lattice, m.cocycle);
    row.bieberbach = !torsion_search(gamma).has_value();

    if (row.homogeneous && row.nontrivial) {
      row.no_special_checked = true;
      row.no_special = true;
      for (const H2Element& a : m.cohomology.all_elements())
        if (is_special(m.cohomology, a)) row.no_special = false;
    }
    if (row.bieberbach && row.nontrivial && row.homogeneous) s.pass = false;
    s.rows.push_back(std::move(row));
  }
  std::sort(s.rows.begin(), s.rows.end(),
            [](const TheoremRow& a, const TheoremRow& b) {
              return a.name < b.name;
            });
  return s;
}

namespace {

json report_json(const AnalysisReport& r) {
  json j;
  j["name"] = r.name;
  j["group_order"] = std::to_string(r.group_order);
  j["structure"] = r.structure;
  j["rank"] = std::to_string(r.rank);
  j["faithful"] = r.faithful;
  json cs = json::array();
  for (const ConstituentReport& c : r.constituents) {
    json pb = json::object();
    for (const auto& [p, in] : c.principal_block)
      pb[std::to_string(p)] = in;
    cs.push_back(json{{"degree", std::to_string(c.degree)},
                      {"multiplicity", std::to_string(c.multiplicity)},
                      {"principal_block", std::move(pb)},
                      {"table_row", std::to_string(c.table_row)}});
  }
  j["constituents"] = std::move(cs);
  j["component_count"] = std::to_string(r.component_count);
  j["homogeneous"] = r.homogeneous;
  json ir = json::array();
  for (std::size_t v : r.isotypic_ranks) ir.push_back(std::to_string(v));
  j["isotypic_ranks"] = std::move(ir);
  json inv = json::array();
  for (const Int& d : r.h2_invariant_factors) inv.push_back(d.get_str());
  j["h2_invariant_factors"] = std::move(inv);
  j["special"] = r.special;
  j["torsion_free"] = r.torsion_free;
  j["verdicts_agree"] = r.verdicts_agree;
  if (r.socle_elementary_abelian)
    j["socle_elementary_abelian"] = *r.socle_elementary_abelian;
  if (r.c_components) {
    j["c_components"] = std::to_string(*r.c_components);
    j["kahler_consistent"] = *r.kahler_consistent;
  }
  return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
  return report_json(r).dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "fixture: " << r.name << "\n";
  os << "point group: order " << r.group_order << " (" << r.structure
     << ")\n";
  os << "lattice: rank " << r.rank << ", "
     << (r.faithful ? "faithful" : "not faithful") << "\n";
  os << "constituents:";
  for (const ConstituentReport& c : r.constituents) {
    os << " " << c.multiplicity << "*chi[" << c.table_row << "](deg "
       << c.degree << ")";
  }
  os << "\n";
  os << "components: " << r.component_count << " => "
     << (r.homogeneous ? "homogeneous" : "non-homogeneous") << "\n";
  os << "isotypic ranks:";
  for (std::size_t v : r.isotypic_ranks) os << " " << v;
  os << "\n";
  os << "H^2 invariant factors:";
  if (r.h2_invariant_factors.empty()) os << " (trivial)";
  for (const Int& d : r.h2_invariant_factors) os << " " << d.get_str();
  os << "\n";
  os << "special class: " << (r.special ? "yes" : "no") << "\n";
  os << "torsion-free (brute force): " << (r.torsion_free ? "yes" : "no")
     << "\n";
  for (const ConstituentReport& c : r.constituents)
    for (const auto& [p, in] : c.principal_block)
      os << "principal " << p << "-block, chi[" << c.table_row
         << "]: " << (in ? "in" : "out") << "\n";
  if (r.socle_elementary_abelian)
    os << "socle elementary abelian: "
       << (*r.socle_elementary_abelian ? "yes" : "no") << "\n";
  if (r.c_components)
    os << "complex components: " << *r.c_components << " (consistency "
       << (*r.kahler_consistent ? "ok" : "VIOLATED") << ")\n";
  return os.str();
}

std::string summary_to_json(const TheoremSummary& s) {
  json rows = json::array();
  for (const TheoremRow& r : s.rows) {
    json j{{"bieberbach", r.bieberbach},
           {"component_count", std::to_string(r.component_count)},
           {"homogeneous", r.homogeneous},
           {"name", r.name},
           {"nontrivial_holonomy", r.nontrivial}};
    if (r.no_special_checked) j["no_special_class"] = r.no_special;
    rows.push_back(std::move(j));
  }
  json j{{"pass", s.pass}, {"rows", std::move(rows)}};
  return j.dump(2) + "\n";
}

std::string summary_to_text(const TheoremSummary& s) {
  std::ostringstream os;
  os << "fixture                bieberbach  |G|>1  homogeneous  components\n";
  for (const TheoremRow& r : s.rows) {
    os << r.name;
    for (std::size_t i = r.name.size(); i < 23; ++i) os << ' ';
    os << (r.bieberbach ? "yes" : "no ") << "         "
       << (r.nontrivial ? "yes" : "no ") << "    "
       << (r.homogeneous ? "yes" : "no ") << "          " << r.component_count
       << "\n";
    if (r.no_special_checked)
      os << "  (homogeneous non-torus: H^2 has special class? "
         << (r.no_special ? "no" : "yes") << ")\n";
  }
  os << (s.pass ? "PASS" : "FAIL")
     << ": no Bieberbach fixture with nontrivial holonomy is homogeneous\n";
  return os.str();
}

}  // namespace holo
