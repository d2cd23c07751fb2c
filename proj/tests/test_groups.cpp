#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "holonomy/error.hpp"
#include "holonomy/groups.hpp"

using namespace holo;

TEST_CASE("enumeration of standard groups") {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  CHECK(s3->order() == 6);
  CHECK(!s3->is_abelian());

  GroupPtr trivial = enumerate_elements(GroupSpec{});
  CHECK(trivial->order() == 1);

  GroupPtr klein = enumerate_elements(klein_four_matrix_spec());
  CHECK(klein->order() == 4);
  CHECK(klein->exponent() == 2);
  CHECK(klein->is_abelian());

  GroupPtr q8 = enumerate_elements(helpers::q8_spec());
  CHECK(q8->order() == 8);
  CHECK(q8->exponent() == 4);

  GroupPtr a4 = enumerate_elements(helpers::a4_spec());
  CHECK(a4->order() == 12);
}

TEST_CASE("order cap is enforced") {
  GroupSpec spec = symmetric3_spec();
  spec.order_cap = 5;
  CHECK_THROWS_AS(enumerate_elements(spec), Error);
  try {
    enumerate_elements(spec);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::cap);
  }
}

TEST_CASE("conjugacy classes") {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  REQUIRE(s3->num_classes() == 3);
  std::multiset<std::size_t> sizes;
  for (std::size_t c = 0; c < 3; ++c) sizes.insert(s3->class_size(c));
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  CHECK(s3->class_of(0) == 0);
  CHECK(s3->class_size(0) == 1);

  GroupPtr klein = enumerate_elements(klein_four_matrix_spec());
  CHECK(klein->num_classes() == 4);

  GroupPtr q8 = enumerate_elements(helpers::q8_spec());
  CHECK(q8->num_classes() == 5);

  // class sizes sum to |G| and divide |G|
  for (GroupPtr g : {s3, klein, q8}) {
    std::size_t total = 0;
    for (std::size_t c = 0; c < g->num_classes(); ++c) {
      total += g->class_size(c);
      CHECK(g->order() % g->class_size(c) == 0);
    }
    CHECK(total == g->order());
    for (std::size_t a = 0; a < g->order(); ++a)
      CHECK(g->order() % g->element_order(static_cast<int>(a)) == 0);
  }
}

TEST_CASE("prime order subgroups") {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  auto reps = s3->prime_order_subgroups();
  REQUIRE(reps.size() == 2);
  std::multiset<std::size_t> orders;
  for (const auto& [sub, gen] : reps) {
    orders.insert(sub.order());
    CHECK(s3->element_order(gen) == static_cast<int>(sub.order()));
  }
  CHECK(orders == std::multiset<std::size_t>{2, 3});

  CHECK(enumerate_elements(GroupSpec{})->prime_order_subgroups().empty());

  GroupPtr c4 = enumerate_elements(cyclic_spec(4));
  auto c4reps = c4->prime_order_subgroups();
  REQUIRE(c4reps.size() == 1);
  CHECK(c4reps[0].first.order() == 2);

  // every prime-order element is conjugate into exactly one representative
  for (GroupPtr g : {s3, c4, enumerate_elements(helpers::a4_spec())}) {
    auto prs = g->prime_order_subgroups();
    for (std::size_t a = 1; a < g->order(); ++a) {
      int ord = g->element_order(static_cast<int>(a));
      bool prime = ord == 2 || ord == 3 || ord == 5 || ord == 7;
      if (!prime) continue;
      Subgroup h = g->generated_subgroup({static_cast<int>(a)});
      int hits = 0;
      for (const auto& [rep, gen] : prs)
        for (std::size_t x = 0; x < g->order(); ++x)
          if (g->conjugate_subgroup(h, static_cast<int>(x)) == rep) {
            ++hits;
            break;
          }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("socle and minimal normal subgroups") {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  Subgroup socle = s3->socle();
  CHECK(socle.order() == 3);
  CHECK(s3->is_normal(socle));
  CHECK(s3->is_cyclic(socle));

  GroupPtr c5 = enumerate_elements(cyclic_spec(5));
  CHECK(c5->socle().order() == 5);

  GroupPtr a4 = enumerate_elements(helpers::a4_spec());
  Subgroup v4 = a4->socle();
  CHECK(v4.order() == 4);
  CHECK(a4->is_elementary_abelian(v4));

  CHECK_THROWS_AS(enumerate_elements(GroupSpec{})->socle(), Error);

  // brute-force: socle equals the product of all minimal normal subgroups
  // found by exhaustive normal-closure enumeration
  for (GroupPtr g : {s3, a4, enumerate_elements(klein_four_matrix_spec())}) {
    std::vector<Subgroup> normals;
    for (std::size_t a = 1; a < g->order(); ++a)
      normals.push_back(g->normal_closure(static_cast<int>(a)));
    std::vector<Subgroup> minimal;
    for (const Subgroup& n : normals) {
      bool is_min = true;
      for (const Subgroup& m : normals)
        if (m.order() > 1 && m.order() < n.order() &&
            std::includes(n.elements.begin(), n.elements.end(),
                          m.elements.begin(), m.elements.end()))
          is_min = false;
      if (is_min) minimal.push_back(n);
    }
    CHECK(g->product_subgroup(minimal) == g->socle());
  }
}

TEST_CASE("predicates and sylow subgroups") {
  GroupPtr klein = enumerate_elements(klein_four_matrix_spec());
  CHECK(klein->is_elementary_abelian(klein->whole_group()));

  GroupPtr c4 = enumerate_elements(cyclic_spec(4));
  CHECK(!c4->is_elementary_abelian(c4->whole_group()));
  CHECK(c4->is_cyclic(c4->whole_group()));

  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  Subgroup syl3 = s3->sylow_subgroup(3);
  CHECK(syl3.order() == 3);
  CHECK(s3->is_cyclic(syl3));
  CHECK(s3->sylow_subgroup(2).order() == 2);
  CHECK_THROWS_AS(s3->sylow_subgroup(5), Error);

  GroupPtr q8 = enumerate_elements(helpers::q8_spec());
  CHECK(q8->sylow_subgroup(2).order() == 8);

  CHECK(s3->prime_divisors() == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("subgroup re-indexing") {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  Subgroup socle = s3->socle();
  std::vector<int> embed;
  GroupPtr c3 = subgroup_as_group(*s3, socle, embed);
  CHECK(c3->order() == 3);
  CHECK(embed.size() == 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(embed[c3->mul(static_cast<int>(a), static_cast<int>(b))] ==
            s3->mul(embed[a], embed[b]));
}

TEST_CASE("words evaluate to their elements") {
  GroupPtr s3 = enumerate_elements(symmetric3_spec());
  for (std::size_t a = 0; a < s3->order(); ++a) {
    int acc = 0;
    for (int gi : s3->word(static_cast<int>(a)))
      acc = s3->mul(acc, s3->generators()[gi]);
    CHECK(acc == static_cast<int>(a));
  }
}
