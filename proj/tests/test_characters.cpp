#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "helpers.hpp"
#include "holonomy/characters.hpp"
#include "holonomy/error.hpp"
#include "holonomy/modp.hpp"

using namespace holo;

namespace {

std::multiset<std::uint64_t> degree_multiset(const CharacterTable& t) {
  return {t.degrees.begin(), t.degrees.end()};
}

void check_orthogonality(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  std::uint64_t ell = t.ell;
  std::size_t r = t.num_rows();
  // rows
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t s = 0;
      for (std::size_t c = 0; c < g.num_classes(); ++c) {
        std::size_t cinv = g.inverse_class(static_cast<int>(c));
        s = addmod(s,
                   mulmod(g.class_size(static_cast<int>(c)) % ell,
                          mulmod(t.rows[i][c], t.rows[j][cinv], ell), ell),
                   ell);
      }
      CHECK(s == (i == j ? g.order() % ell : 0));
    }
  // columns
  for (std::size_t c = 0; c < g.num_classes(); ++c)
    for (std::size_t d = 0; d < g.num_classes(); ++d) {
      std::uint64_t s = 0;
      std::size_t dinv = g.inverse_class(static_cast<int>(d));
      for (std::size_t i = 0; i < r; ++i)
        s = addmod(s, mulmod(t.rows[i][c], t.rows[i][dinv], ell), ell);
      std::uint64_t expect =
          c == d ? (g.order() / g.class_size(static_cast<int>(c))) % ell : 0;
      CHECK(s == expect);
    }
  // degree sum
  Int sq = 0;
  for (std::uint64_t deg : t.degrees) {
    sq += Int(static_cast<unsigned long>(deg)) *
          Int(static_cast<unsigned long>(deg));
    CHECK(g.order() % deg == 0);
  }
  CHECK(sq == Int(static_cast<unsigned long>(g.order())));
}

}  // namespace

TEST_CASE("character table degrees and orthogonality") {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  CharacterTable t3 = character_table(s3);
  CHECK(degree_multiset(t3) == std::multiset<std::uint64_t>{1, 1, 2});
  check_orthogonality(t3);
  CHECK(t3.trivial_row() == 0);
  CHECK(t3.ell > 2 * s3->order());
  CHECK(t3.ell % s3->exponent() == 1);

  CharacterTable tq = character_table(enumerate_elements(helpers::q8_spec()));
  CHECK(degree_multiset(tq) == std::multiset<std::uint64_t>{1, 1, 1, 1, 2});
  check_orthogonality(tq);

  CharacterTable ta = character_table(enumerate_elements(helpers::a4_spec()));
  CHECK(degree_multiset(ta) == std::multiset<std::uint64_t>{1, 1, 1, 3});
  check_orthogonality(ta);

  for (int n : {1, 2, 3, 4, 5, 6}) {
    CharacterTable t = character_table(enumerate_elements(cyclic_spec(n)));
    CHECK(t.num_rows() == static_cast<std::size_t>(n));
    for (std::uint64_t d : t.degrees) CHECK(d == 1);
    check_orthogonality(t);
  }
  CharacterTable tk =
      character_table(enumerate_elements(klein_four_matrix_spec()));
  CHECK(degree_multiset(tk) == std::multiset<std::uint64_t>{1, 1, 1, 1});
  check_orthogonality(tk);
}

TEST_CASE("tables are deterministic for a fixed seed") {
  GroupPtr q8 = enumerate_elements(helpers::q8_spec());
  CharacterTable a = character_table(q8, 7);
  CharacterTable b = character_table(q8, 7);
  CHECK(a.rows == b.rows);
  CHECK(a.degrees == b.degrees);
  CHECK(a.ell == b.ell);
}

TEST_CASE("galois orbits") {
  CharacterTable c3 = character_table(enumerate_elements(cyclic_spec(3)));
  auto o3 = galois_orbits(c3);
  REQUIRE(o3.size() == 2);
  std::multiset<std::size_t> sizes3{o3[0].size(), o3[1].size()};
  CHECK(sizes3 == std::multiset<std::size_t>{1, 2});

  CharacterTable s3 = character_table(enumerate_elements(symmetric3_spec()));
  CHECK(galois_orbits(s3).size() == 3);

  CharacterTable c5 = character_table(enumerate_elements(cyclic_spec(5)));
  auto o5 = galois_orbits(c5);
  REQUIRE(o5.size() == 2);
  std::multiset<std::size_t> sizes5{o5[0].size(), o5[1].size()};
  CHECK(sizes5 == std::multiset<std::size_t>{1, 4});

  // trivial character is always a singleton orbit
  for (auto& orbit : o5)
    if (std::find(orbit.begin(), orbit.end(), c5.trivial_row()) != orbit.end())
      CHECK(orbit.size() == 1);
}

TEST_CASE("multiplicities") {
  GroupPtr c2 = enumerate_elements(cyclic_spec(2));
  CharacterTable t2 = character_table(c2);
  auto dec = multiplicities(t2, {2, 0});
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[1].second == 1);

  GroupPtr trivial = enumerate_elements(GroupSpec{});
  CharacterTable tt = character_table(trivial, 0, 1, 7);
  auto dtriv = multiplicities(tt, {7});
  REQUIRE(dtriv.size() == 1);
  CHECK(dtriv[0].second == 7);

  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  CharacterTable t3 = character_table(s3, 0, 1, 6);
  IntVec regular(s3->num_classes(), 0);
  regular[0] = 6;
  auto dreg = multiplicities(t3, regular);
  REQUIRE(dreg.size() == 3);
  for (const auto& [row, mult] : dreg) CHECK(mult == t3.degrees[row]);

  // additivity
  auto d1 = multiplicities(t3, {3, 1, 0});
  auto d2 = multiplicities(t3, {2, 0, 2});
  auto dsum = multiplicities(t3, {5, 1, 2});
  std::map<std::size_t, std::uint64_t> merged;
  for (auto& [r, m] : d1) merged[r] += m;
  for (auto& [r, m] : d2) merged[r] += m;
  std::map<std::size_t, std::uint64_t> whole(dsum.begin(), dsum.end());
  CHECK(merged == whole);

  CHECK_THROWS_AS(multiplicities(t3, {1, 1, 0}), Error);
}

TEST_CASE("restriction to subgroups") {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  CharacterTable tg = character_table(s3);
  Subgroup socle = s3->socle();
  std::vector<int> embed;
  GroupPtr c3 = subgroup_as_group(*s3, socle, embed);
  CharacterTable th = character_table(c3);

  // find the sign character: degree 1, not the trivial row
  std::size_t sign_row = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (tg.degrees[i] == 1 && i != tg.trivial_row()) sign_row = i;
  auto rsign = restrict_character(tg, th, embed, sign_row);
  REQUIRE(rsign.size() == 1);
  CHECK(rsign[0].first == th.trivial_row());
  CHECK(rsign[0].second == 1);

  std::size_t two_row = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (tg.degrees[i] == 2) two_row = i;
  auto rtwo = restrict_character(tg, th, embed, two_row);
  REQUIRE(rtwo.size() == 2);
  for (const auto& [row, mult] : rtwo) {
    CHECK(row != th.trivial_row());
    CHECK(mult == 1);
  }

  // restriction to the trivial subgroup: degree copies of the trivial char
  std::vector<int> embed1;
  GroupPtr triv = subgroup_as_group(*s3, s3->trivial_subgroup(), embed1);
  CharacterTable t1 = character_table(triv);
  auto r1 = restrict_character(tg, t1, embed1, two_row);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].second == 2);

  // degree balance on every row
  for (std::size_t i = 0; i < 3; ++i) {
    std::uint64_t total = 0;
    for (const auto& [row, mult] : restrict_character(tg, th, embed, i))
      total += mult * th.degrees[row];
    CHECK(total == tg.degrees[i]);
  }
}

TEST_CASE("cyclotomic lifting") {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  CharacterTable tg = character_table(s3);
  auto lift0 = lift_to_cyclotomic(tg, tg.trivial_row());
  for (const CycInt& v : lift0) {
    CHECK(v[0] == 1);
    for (std::size_t k = 1; k < v.size(); ++k) CHECK(v[k] == 0);
  }

  std::size_t sign_row = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (tg.degrees[i] == 1 && i != tg.trivial_row()) sign_row = i;
  auto lifts = lift_to_cyclotomic(tg, sign_row);
  // the size-3 class consists of involutions; sign takes value -1 there
  for (std::size_t c = 0; c < 3; ++c)
    if (s3->element_order(s3->class_rep(static_cast<int>(c))) == 2)
      CHECK(lifts[c][0] == -1);

  GroupPtr c3 = enumerate_elements(cyclic_spec(3));
  CharacterTable t3 = character_table(c3);
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == t3.trivial_row()) continue;
    auto l = lift_to_cyclotomic(t3, i);
    // value at a generator class is a primitive cube root: zeta or zeta^2 =
    // -1 - zeta in the power basis of Phi_3
    for (std::size_t c = 0; c < 3; ++c) {
      if (c == 0) continue;
      bool is_zeta = l[c] == CycInt{0, 1};
      bool is_zeta2 = l[c] == CycInt{-1, -1};
      CHECK((is_zeta || is_zeta2));
    }
  }
}

TEST_CASE("eigenvalue multiplicities are consistent") {
  GroupPtr q8 = enumerate_elements(helpers::q8_spec());
  CharacterTable t = character_table(q8);
  for (std::size_t row = 0; row < t.num_rows(); ++row)
    for (std::size_t c = 0; c < q8->num_classes(); ++c) {
      auto n = eigenvalue_multiplicities(t, row, q8->class_rep(c));
      Int total = 0;
      for (const Int& v : n) {
        CHECK(v >= 0);
        total += v;
      }
      CHECK(total == Int(static_cast<unsigned long>(t.degrees[row])));
    }
}

TEST_CASE("principal block membership") {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  CharacterTable t = character_table(s3);
  std::size_t sign_row = 0, two_row = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (t.degrees[i] == 2) two_row = i;
    if (t.degrees[i] == 1 && i != t.trivial_row()) sign_row = i;
  }
  CHECK(principal_block_test(t, t.trivial_row(), 2));
  CHECK(principal_block_test(t, sign_row, 2));
  CHECK(!principal_block_test(t, two_row, 2));
  CHECK(principal_block_test(t, t.trivial_row(), 3));
  CHECK(principal_block_test(t, sign_row, 3));
  CHECK(principal_block_test(t, two_row, 3));

  // trivial character is in the principal block for every (G, p)
  for (GroupPtr g : {enumerate_elements(helpers::q8_spec()),
                     enumerate_elements(helpers::a4_spec()),
                     enumerate_elements(klein_four_matrix_spec())}) {
    CharacterTable tg = character_table(g);
    for (std::uint64_t p : g->prime_divisors())
      CHECK(principal_block_test(tg, tg.trivial_row(), p));
  }
}
