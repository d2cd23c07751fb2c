#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "holonomy/error.hpp"
#include "holonomy/fixtures.hpp"
#include "holonomy/kahler.hpp"

using namespace holo;

namespace {

CycRat gauss(const CycField& f, Rat re, Rat im) {
  CycRat z(f.degree);
  z[0] = std::move(re);
  if (im != 0) {
    CycInt iota = cyc_root_power(f, f.order / 4);
    for (std::size_t k = 0; k < f.degree; ++k) z[k] += im * Rat(iota[k]);
  }
  return z;
}

CycMatrix gmat(const CycField& f,
               const std::vector<std::vector<std::pair<Rat, Rat>>>& rows) {
  CycMatrix m = cyc_mat_zero(f, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = gauss(f, rows[i][j].first, rows[i][j].second);
  return m;
}

}  // namespace

TEST_CASE("real and imaginary parts of Gaussian rationals") {
  CycField f = cyclotomic_field(4);
  auto [re, im] = cyc_real_imag(f, gauss(f, Rat(3, 2), Rat(-5)));
  CHECK(re == Rat(3, 2));
  CHECK(im == Rat(-5));

  CycField f8 = cyclotomic_field(8);
  CycRat zeta8 = cycr_from_int(cyc_root_power(f8, 1));
  CHECK_THROWS_AS(cyc_real_imag(f8, zeta8), Error);
}

TEST_CASE("realified affine pairs") {
  CycField f = cyclotomic_field(4);

  ComplexAffine ident{cyc_mat_identity(f, 2),
                      {gauss(f, Rat(0), Rat(0)), gauss(f, Rat(0), Rat(0))}};
  AffinePair rid = realify_affine(f, ident);
  CHECK(rid.linear.is_identity());
  CHECK(rid.linear.rows() == 4);

  ComplexAffine mul_i{gmat(f, {{{Rat(0), Rat(1)}}}),
                      {gauss(f, Rat(0), Rat(0))}};
  AffinePair ri = realify_affine(f, mul_i);
  CHECK(ri.linear.at(0, 0) == 0);
  CHECK(ri.linear.at(0, 1) == Rat(-1));
  CHECK(ri.linear.at(1, 0) == Rat(1));
  CHECK(ri.linear.at(1, 1) == 0);

  // translations add
  ComplexAffine ta{cyc_mat_identity(f, 1), {gauss(f, Rat(1, 2), Rat(3))}};
  ComplexAffine tb{cyc_mat_identity(f, 1), {gauss(f, Rat(1), Rat(-1, 2))}};
  AffinePair sum = realify_affine(f, complex_affine_mul(f, ta, tb));
  CHECK(sum.translation == RatVec{Rat(3, 2), Rat(5, 2)});
}

TEST_CASE("the doubling map is a homomorphism") {
  CycField f = cyclotomic_field(4);
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  auto ratq = [&] {
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  auto rand_entry = [&] { return gauss(f, ratq(), ratq()); };
  for (int t = 0; t < 40; ++t) {
    ComplexAffine x{cyc_mat_zero(f, 2, 2), {rand_entry(), rand_entry()}};
    ComplexAffine y{cyc_mat_zero(f, 2, 2), {rand_entry(), rand_entry()}};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        x.linear.at(i, j) = rand_entry();
        y.linear.at(i, j) = rand_entry();
      }
    AffinePair lhs = realify_affine(f, complex_affine_mul(f, x, y));
    AffinePair rhs = affine_mul(realify_affine(f, x), realify_affine(f, y));
    CHECK(affine_eq(lhs, rhs));
  }
}

TEST_CASE("realified representations and the character identity") {
  CycField f = cyclotomic_field(4);

  // trivial rep of degree n -> identity of degree 2n
  GroupPtr c2 = enumerate_elements(cyclic_spec(2));
  ComplexRep triv = complex_rep(c2, f, 3, {cyc_mat_identity(f, 3)});
  RealifiedRep rtriv = realify_rep(triv);
  CHECK(rtriv.degree == 6);
  for (const RatMatrix& m : rtriv.matrices) CHECK(m.is_identity());

  // C4 generator by [i]: realified trace 0 = 2 Re(i)
  GroupPtr c4 = enumerate_elements(cyclic_spec(4));
  ComplexRep repi = complex_rep(c4, f, 1, {gmat(f, {{{Rat(0), Rat(1)}}})});
  RealifiedRep ri = realify_rep(repi);
  int gen = c4->generators()[0];
  Rat tr = ri.matrices[gen].at(0, 0) + ri.matrices[gen].at(1, 1);
  CHECK(tr == 0);

  // C2 by diag(1,-1): realified character (4, 0)
  ComplexRep hyper = complex_rep(
      c2, f, 2,
      {gmat(f, {{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}},
                {{Rat(0), Rat(0)}, {Rat(-1), Rat(0)}}})});
  RealifiedRep rh = realify_rep(hyper);
  for (std::size_t c = 0; c < c2->num_classes(); ++c) {
    int rep = c2->class_rep(static_cast<int>(c));
    Rat trace(0);
    for (std::size_t i = 0; i < 4; ++i) trace += rh.matrices[rep].at(i, i);
    CHECK(trace == (rep == 0 ? Rat(4) : Rat(0)));
  }

  // chi_real = 2 Re chi_phi on every class, for several reps
  for (const ComplexRep& phi : {triv, repi, hyper}) {
    std::vector<CycRat> chi = complex_character(phi);
    RealifiedRep r = realify_rep(phi);
    for (std::size_t c = 0; c < phi.group->num_classes(); ++c) {
      int rep = phi.group->class_rep(static_cast<int>(c));
      Rat trace(0);
      for (std::size_t i = 0; i < r.degree; ++i)
        trace += r.matrices[rep].at(i, i);
      auto [re, im] = cyc_real_imag(f, chi[c]);
      CHECK(trace == 2 * re);
    }
  }
}

TEST_CASE("complex component counts") {
  CycField f = cyclotomic_field(4);
  GroupPtr c2 = enumerate_elements(cyclic_spec(2));
  GroupPtr c4 = enumerate_elements(cyclic_spec(4));

  ComplexRep repi = complex_rep(c4, f, 1, {gmat(f, {{{Rat(0), Rat(1)}}})});
  CHECK(c_homogeneity(repi) == 1);  // irreducible

  ComplexRep hyper = complex_rep(
      c2, f, 2,
      {gmat(f, {{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}},
                {{Rat(0), Rat(0)}, {Rat(-1), Rat(0)}}})});
  CHECK(c_homogeneity(hyper) == 2);

  ComplexRep triv1 = complex_rep(c2, f, 1, {cyc_mat_identity(f, 1)});
  CHECK(c_homogeneity(direct_sum(triv1, triv1)) == 1);

  // characters add under direct sums
  std::vector<CycRat> a = complex_character(hyper);
  std::vector<CycRat> b = complex_character(triv1);
  std::vector<CycRat> s = complex_character(direct_sum(hyper, triv1));
  for (std::size_t c = 0; c < a.size(); ++c)
    CHECK(s[c] == cycr_add(a[c], b[c]));
}

TEST_CASE("theorem check on complex fixtures") {
  for (const FixtureDocument& doc : builtin_catalog()) {
    if (doc.kind != FixtureKind::complex) continue;
    const ComplexFixture& fx = *doc.complex_data;
    CycField f = cyclotomic_field(fx.field_order);
    KahlerVerdict v = kahler_theorem_check(f, fx.generators);
    CHECK(v.consistent);
    CHECK(v.theorem_holds);
    if (doc.name == "complex-torus") {
      CHECK(v.c_components == 1);
      CHECK(v.real_report.homogeneous);
    }
    if (doc.name == "hyperelliptic") {
      CHECK(v.c_components == 2);
      CHECK(v.real_report.component_count == 2);
    }
  }

  // split complex extension: torsion detected
  CycField f = cyclotomic_field(4);
  std::vector<ComplexAffine> split{
      ComplexAffine{gmat(f, {{{Rat(-1), Rat(0)}}}),
                    {gauss(f, Rat(0), Rat(0))}},
      ComplexAffine{cyc_mat_identity(f, 1), {gauss(f, Rat(1), Rat(0))}},
      ComplexAffine{cyc_mat_identity(f, 1), {gauss(f, Rat(0), Rat(1))}}};
  CHECK_THROWS_AS(kahler_theorem_check(f, split), Error);
}
