// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "holonomy/analyze.hpp"
#include "holonomy/characters.hpp"
#include "holonomy/cohomology.hpp"
#include "holonomy/crystal.hpp"
#include "holonomy/error.hpp"
#include "holonomy/fixtures.hpp"
#include "holonomy/kahler.hpp"
#include "holonomy/lattices.hpp"
#include "holonomy/modp.hpp"

using namespace holo;

namespace {

int failures = 0;
std::string fixture_dir = "fixtures";

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

void run(int index, const std::string& name, double budget_seconds,
         void (*body)(Check&)) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  if (budget_seconds > 0 && secs > budget_seconds)
    c.require(false, "exceeded time budget of " +
                         std::to_string(budget_seconds) + "s");
  std::cout << "criterion " << index << " (" << name << "): "
            << (c.ok ? "PASS" : "FAIL") << " [" << secs << "s]";
  if (!c.ok) std::cout << "  -- " << c.detail;
  std::cout << std::endl;
  if (!c.ok) ++failures;
}

// 1. The catalog harness: every fixture analyzed against its recorded
// expectations, and the no-homogeneous-holonomy verdict over the catalog.
void criterion_catalog(Check& c) {
  std::vector<FixtureDocument> catalog = load_catalog(fixture_dir);
  c.require(catalog.size() >= 7, "catalog has fewer than 7 fixtures");
  for (const FixtureDocument& doc : catalog) {
    AnalysisReport r = analyze_fixture(doc);
    c.require(r.verdicts_agree, doc.name + ": route verdicts disagree");
    auto expect = [&](const std::string& key) {
      auto it = doc.expected.find(key);
      return it == doc.expected.end() ? std::string() : it->second;
    };
    std::string v = expect("component_count");
    if (!v.empty())
      c.require(r.component_count == std::stoul(v),
                doc.name + ": component count " +
                    std::to_string(r.component_count) + " != " + v);
    v = expect("bieberbach");
    if (!v.empty())
      c.require(r.torsion_free == (v == "true"),
                doc.name + ": torsion-freeness mismatch");
    v = expect("homogeneous");
    if (!v.empty())
      c.require(r.homogeneous == (v == "true"),
                doc.name + ": homogeneity mismatch");
    v = expect("h2");
    if (!v.empty()) {
      std::string got;
      for (const Int& f : r.h2_invariant_factors) {
        if (!got.empty()) got += ",";
        got += f.get_str();
      }
      c.require(got == v, doc.name + ": H^2 = [" + got + "] != [" + v + "]");
    }
  }
  TheoremSummary s = verify_theorem(catalog);
  c.require(s.pass, "a Bieberbach fixture with homogeneous holonomy exists");
  c.require(s.rows.size() == catalog.size(), "summary row count mismatch");
}

// 2. Special classes coincide with torsion-free extensions for every
// cohomology class of every lattice in the group/lattice test matrix.
void criterion_special_torsion(Check& c) {
  std::size_t checked = 0;
  for (const auto& entry : helpers::test_matrix()) {
    for (const GLattice& l : entry.lattices) {
      H2Group h(l);
      for (const H2Element& a : h.all_elements()) {
        bool special = is_special(h, a);
        CrystalGroup gamma = build_extension(l, h.lift(a));
        bool torsion_free = !torsion_search(gamma).has_value();
        c.require(special == torsion_free,
                  "special/torsion disagreement at element " +
                      std::to_string(checked));
        ++checked;
      }
    }
  }
  c.require(checked >= 100, "too few classes exercised");
}

// 3. The cochain-complex H^2 equals the norm-quotient H^2 on cyclic groups,
// over 120 seeded random lattices.
void criterion_cyclic_oracle(Check& c) {
  std::mt19937_64 rng(2024);
  std::size_t count = 0;
  for (int n = 1; n <= 6; ++n) {
    GroupPtr cn = enumerate_elements(cyclic_spec(n));
    for (int t = 0; t < 20; ++t) {
      GLattice l = helpers::random_cyclic_lattice(cn, n, 4, rng);
      IntVec slow = h2(l).invariant_factors();
      IntVec fast = h2_cyclic(l).invariant_factors();
      c.require(slow == fast,
                "route mismatch for C" + std::to_string(n));
      ++count;
    }
  }
  c.require(count >= 100, "fewer than 100 random lattices");
}

// 4. The Galois-orbit homogeneity decision matches the isotypic-rank
// decomposition on the catalog and the whole test matrix.
void criterion_homogeneity(Check& c) {
  for (const FixtureDocument& doc : load_catalog(fixture_dir)) {
    if (doc.kind == FixtureKind::complex) continue;
    AnalysisReport r = analyze_fixture(doc);
    std::size_t total = 0;
    for (std::size_t ir : r.isotypic_ranks) {
      c.require(ir > 0, doc.name + ": empty isotypic component reported");
      total += ir;
    }
    c.require(r.isotypic_ranks.size() == r.component_count,
              doc.name + ": component count disagrees with isotypic list");
    c.require(total == r.rank, doc.name + ": isotypic ranks do not sum");
    c.require(r.homogeneous == (r.component_count == 1),
              doc.name + ": homogeneity flag inconsistent");
  }
  for (const auto& entry : helpers::test_matrix()) {
    CharacterTable t = character_table(entry.group, 0, 1, 4);
    auto orbits = galois_orbits(t);
    for (const GLattice& l : entry.lattices) {
      HomogeneityReport hr = homogeneity_test(l, t, orbits);
      std::size_t positive = 0, total = 0;
      for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        std::size_t ir = isotypic_rank(l, t, orbits[oi]);
        if (ir > 0) ++positive;
        total += ir;
      }
      c.require(positive == hr.component_count,
                "orbit count disagrees with isotypic count");
      c.require(total == l.rank(), "isotypic ranks do not sum to the rank");
    }
  }
}

// 5. Character tables: degrees and both orthogonality relations mod ell.
void criterion_character_tables(Check& c) {
  auto check_table = [&](GroupPtr g, std::multiset<std::uint64_t> degrees) {
    CharacterTable t = character_table(g);
    std::multiset<std::uint64_t> got(t.degrees.begin(), t.degrees.end());
    if (!degrees.empty())
      c.require(got == degrees, "wrong degree multiset");
    std::uint64_t ell = t.ell;
    for (std::size_t i = 0; i < t.num_rows(); ++i)
      for (std::size_t j = 0; j < t.num_rows(); ++j) {
        std::uint64_t s = 0;
        for (std::size_t cl = 0; cl < g->num_classes(); ++cl) {
          std::size_t cinv = g->inverse_class(static_cast<int>(cl));
          s = addmod(s,
                     mulmod(g->class_size(static_cast<int>(cl)) % ell,
                            mulmod(t.rows[i][cl], t.rows[j][cinv], ell), ell),
                     ell);
        }
        c.require(s == (i == j ? g->order() % ell : 0),
                  "row orthogonality fails");
      }
    for (std::size_t cl = 0; cl < g->num_classes(); ++cl)
      for (std::size_t d = 0; d < g->num_classes(); ++d) {
        std::uint64_t s = 0;
        std::size_t dinv = g->inverse_class(static_cast<int>(d));
        for (std::size_t i = 0; i < t.num_rows(); ++i)
          s = addmod(s, mulmod(t.rows[i][cl], t.rows[i][dinv], ell), ell);
        std::uint64_t expect =
            cl == d ? (g->order() / g->class_size(static_cast<int>(cl))) % ell
                    : 0;
        c.require(s == expect, "column orthogonality fails");
      }
  };
  check_table(enumerate_elements(symmetric3_spec()), {1, 1, 2});
  check_table(enumerate_elements(helpers::q8_spec()), {1, 1, 1, 1, 2});
  check_table(enumerate_elements(helpers::a4_spec()), {1, 1, 1, 3});
  check_table(enumerate_elements(klein_four_matrix_spec()), {1, 1, 1, 1});
  for (int n = 2; n <= 6; ++n) {
    std::multiset<std::uint64_t> ones;
    for (int i = 0; i < n; ++i) ones.insert(1);
    check_table(enumerate_elements(cyclic_spec(n)), ones);
  }
}

// 6. Principal-block membership via central-character congruences.
void criterion_principal_block(Check& c) {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  CharacterTable t = character_table(s3);
  std::size_t sign_row = 0, two_row = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (t.degrees[i] == 2) two_row = i;
    if (t.degrees[i] == 1 && i != t.trivial_row()) sign_row = i;
  }
  c.require(principal_block_test(t, t.trivial_row(), 2), "S3 trivial not in b0 at p=2");
  c.require(principal_block_test(t, sign_row, 2), "S3 sign not in b0 at p=2");
  c.require(!principal_block_test(t, two_row, 2), "S3 2-dim wrongly in b0 at p=2");
  c.require(principal_block_test(t, t.trivial_row(), 3), "S3 trivial not in b0 at p=3");
  c.require(principal_block_test(t, sign_row, 3), "S3 sign not in b0 at p=3");
  c.require(principal_block_test(t, two_row, 3), "S3 2-dim not in b0 at p=3");
  for (GroupPtr g : {enumerate_elements(helpers::q8_spec()),
                     enumerate_elements(helpers::a4_spec()),
                     enumerate_elements(klein_four_matrix_spec()),
                     enumerate_elements(cyclic_spec(6))}) {
    CharacterTable tg = character_table(g);
    for (std::uint64_t p : g->prime_divisors())
      c.require(principal_block_test(tg, tg.trivial_row(), p),
                "trivial character escaped the principal block");
  }
}

// 7. Nonzero H^2 of a cyclic restriction forces a trivial constituent.
void criterion_trivial_constituent(Check& c) {
  std::size_t nonvacuous = 0;
  for (const FixtureDocument& doc : load_catalog(fixture_dir)) {
    if (doc.kind == FixtureKind::complex) continue;
    Materialized m = materialize(doc);
    const FiniteGroup& g = *m.group;
    for (const auto& [sub, gen] : g.prime_order_subgroups()) {
      std::vector<int> embed;
      GroupPtr h = subgroup_as_group(g, sub, embed);
      GLattice lh = restrict_lattice(m.lattice, h, embed);
      TrivialConstituentVerdict v = trivial_constituent_check(lh);
      if (!v.vacuous) {
        ++nonvacuous;
        c.require(v.h2_nonzero, doc.name + ": verdict marked non-vacuous with zero H^2");
        c.require(v.fixed_rank >= 1,
                  doc.name + ": nonzero H^2 without a trivial constituent");
      }
    }
  }
  c.require(nonvacuous >= 3, "too few non-vacuous restrictions exercised");
}

// 8. The complexified route: character doubling and component-count
// consistency between a complex structure and its realification.
void criterion_complex(Check& c) {
  CycField f = cyclotomic_field(4);
  GroupPtr c2 = enumerate_elements(cyclic_spec(2));
  CycMatrix diag = cyc_mat_zero(f, 2, 2);
  diag.at(0, 0)[0] = Rat(1);
  diag.at(1, 1)[0] = Rat(-1);
  ComplexRep hyper = complex_rep(c2, f, 2, {diag});
  RealifiedRep real = realify_rep(hyper);
  std::vector<CycRat> chi = complex_character(hyper);
  for (std::size_t cl = 0; cl < c2->num_classes(); ++cl) {
    int rep = c2->class_rep(static_cast<int>(cl));
    Rat trace(0);
    for (std::size_t i = 0; i < real.degree; ++i)
      trace += real.matrices[rep].at(i, i);
    auto [re, im] = cyc_real_imag(f, chi[cl]);
    c.require(trace == 2 * re, "doubled trace differs from 2 Re(chi)");
  }
  c.require(c_homogeneity(hyper) == 2, "wrong complex component count");

  bool saw_torus = false, saw_hyper = false;
  for (const FixtureDocument& doc : load_catalog(fixture_dir)) {
    if (doc.kind != FixtureKind::complex) continue;
    CycField ff = cyclotomic_field(doc.complex_data->field_order);
    KahlerVerdict v = kahler_theorem_check(ff, doc.complex_data->generators);
    c.require(v.consistent, doc.name + ": complex/rational counts inconsistent");
    c.require(v.theorem_holds, doc.name + ": expected verdict fails");
    if (doc.name == "complex-torus") {
      saw_torus = true;
      c.require(v.c_components == 1, "complex torus is not irreducible");
      c.require(v.real_report.homogeneous,
                "realified torus lattice is not homogeneous");
    }
    if (doc.name == "hyperelliptic") {
      saw_hyper = true;
      c.require(v.c_components == 2, "hyperelliptic complex count != 2");
      c.require(v.real_report.component_count == 2,
                "hyperelliptic rational count != 2");
    }
  }
  c.require(saw_torus && saw_hyper, "complex fixtures missing from catalog");
}

// 9. Smith decomposition invariants on 1000 random matrices.
void criterion_smith(Check& c) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int t = 0; t < 1000; ++t) {
    IntMatrix a = helpers::random_small_matrix(rng, dim(rng), dim(rng));
    SmithDecomposition s = smith_normal_form(a);
    c.require(s.U * a * s.V == s.D, "U A V != D");
    Int du = s.U.det(), dv = s.V.det();
    c.require(du * du == 1 && dv * dv == 1, "transform not unimodular");
    std::size_t r = s.rank();
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j) {
        if (i == j) continue;
        c.require(s.D.at(i, j) == 0, "D is not diagonal");
      }
    for (std::size_t i = 0; i < r; ++i) {
      c.require(s.D.at(i, i) > 0, "invariant factor not positive");
      if (i + 1 < r)
        c.require(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0,
                  "divisibility chain broken");
    }
    for (std::size_t i = r; i < std::min(s.D.rows(), s.D.cols()); ++i)
      c.require(s.D.at(i, i) == 0, "rank miscounted");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) fixture_dir = argv[1];
  run(1, "fixture catalog and theorem harness", 10.0, criterion_catalog);
  run(2, "special classes match torsion-free extensions", 60.0,
      criterion_special_torsion);
  run(3, "cyclic cohomology oracle pair", 60.0, criterion_cyclic_oracle);
  run(4, "homogeneity dual routes", 60.0, criterion_homogeneity);
  run(5, "character table orthogonality", 30.0, criterion_character_tables);
  run(6, "principal block membership", 30.0, criterion_principal_block);
  run(7, "trivial constituents from nonzero H^2", 30.0,
      criterion_trivial_constituent);
  run(8, "complex structures and realification", 30.0, criterion_complex);
  run(9, "Smith decomposition invariants", 30.0, criterion_smith);
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
