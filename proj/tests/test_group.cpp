#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "coverhom/group.hpp"

using namespace coverhom;

namespace {
GroupPtr s3() {
  return FiniteGroup::from_generators(
      {Permutation::parse(3, "(1 2)"), Permutation::parse(3, "(1 2 3)")});
}
}  // namespace

TEST_CASE("permutation basics") {
  auto p = Permutation::parse(3, "(1 2 3)");
  CHECK(p(0) == 1);
  CHECK((p * p * p).is_identity());
  CHECK(p.inverse() == Permutation::parse(3, "(1 3 2)"));
  CHECK(p.cycle_str() == "(1 2 3)");
  CHECK_THROWS(Permutation::parse(2, "(1 3)"));
}

TEST_CASE("group enumeration") {
  auto c3 = FiniteGroup::from_generators({Permutation::parse(3, "(1 2 3)")});
  CHECK(c3->order() == 3);
  CHECK(c3->is_abelian());

  auto g = s3();
  CHECK(g->order() == 6);
  CHECK(g->class_count() == 3);
  CHECK_FALSE(g->is_abelian());

  CHECK(FiniteGroup::trivial()->order() == 1);
}

TEST_CASE("cayley structure") {
  auto g = s3();
  // rows and columns of the multiplication table are permutations of indices
  for (size_t a = 0; a < g->order(); ++a) {
    std::vector<char> row(g->order(), 0), col(g->order(), 0);
    for (size_t b = 0; b < g->order(); ++b) {
      row[g->mul((int)a, (int)b)] = 1;
      col[g->mul((int)b, (int)a)] = 1;
    }
    CHECK(std::count(row.begin(), row.end(), 1) == (long)g->order());
    CHECK(std::count(col.begin(), col.end(), 1) == (long)g->order());
    CHECK(g->mul((int)a, g->inv((int)a)) == 0);
  }
  // associativity spot checks
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    int a = rng() % g->order(), b = rng() % g->order(), c = rng() % g->order();
    CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
  }
}

TEST_CASE("conjugacy classes") {
  auto g = s3();
  size_t total = 0;
  for (const auto& cls : g->classes()) {
    CHECK(g->order() % cls.size() == 0);
    total += cls.size();
  }
  CHECK(total == g->order());
  CHECK(g->classes()[0] == std::vector<int>{0});

  auto ab = regular_abelian({2, 3}).group;
  for (const auto& cls : ab->classes()) CHECK(cls.size() == 1);
}

TEST_CASE("regular abelian groups") {
  auto q = regular_abelian({2, 2});
  CHECK(q.group->order() == 4);
  CHECK(q.group->exponent() == 2);
  CHECK(regular_abelian({2, 2, 2, 2, 2}).group->order() == 32);
  CHECK(regular_abelian({1}).group->order() == 1);
  // tuple round-trip
  auto z12 = regular_abelian({4, 3});
  for (int e = 0; e < 12; ++e) CHECK(z12.index_of_tuple(z12.tuple_of(e)) == e);
}

TEST_CASE("epimorphism evaluation") {
  auto q = regular_abelian({2, 2});
  Epimorphism phi(2, q.group, q.factor_generators);
  CHECK(phi.evaluate(Word::parse(2, "abAB")) == 0);
  CHECK(phi.evaluate(Word::identity(2)) == 0);

  auto g = s3();
  Epimorphism psi(2, g, {g->generator_indices()[0], g->generator_indices()[1]});
  int comm = psi.evaluate(Word::parse(2, "abAB"));
  CHECK(g->element_order(comm) == 3);

  CHECK_THROWS(psi.evaluate(Word::parse(3, "c")));
  // non-surjective images rejected
  CHECK_THROWS(Epimorphism(2, g, {0, 0}));
}

TEST_CASE("subgroups") {
  auto g = s3();
  auto trivial = g->subgroup({});
  CHECK(trivial->order() == 1);
  CHECK(trivial->index() == 6);

  int rot = g->index_of(Permutation::parse(3, "(1 2 3)"));
  auto a3 = g->subgroup({rot});
  CHECK(a3->order() == 3);
  CHECK(a3->index() == 2);
  CHECK(a3->is_normal());
  CHECK(a3->left_cosets().size() == 2);

  auto whole = g->subgroup(g->generator_indices());
  CHECK(whole->order() == 6);
  CHECK(whole->index() == 1);

  // Lagrange on every cyclic subgroup
  for (size_t e = 0; e < g->order(); ++e) {
    auto h = g->subgroup({(int)e});
    CHECK(h->order() * h->index() == g->order());
  }

  auto as = a3->as_group();
  CHECK(as.group->order() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(as.to_sub.at(as.to_parent[i]) == (int)i);
}

TEST_CASE("cyclic intersections") {
  auto q = regular_abelian({2, 2});
  int a = q.factor_generators[0], b = q.factor_generators[1];
  CHECK(cyclic_intersection_trivial(*q.group, a, b));
  CHECK_FALSE(cyclic_intersection_trivial(*q.group, a, a));
  CHECK(cyclic_intersection_trivial(*q.group, 0, a));
}

TEST_CASE("generating tuples") {
  auto g = s3();
  auto pairs = g->generating_tuples(2);
  CHECK(!pairs.empty());
  for (const auto& t : pairs) {
    int comm = g->mul(g->mul(t[0], t[1]), g->mul(g->inv(t[0]), g->inv(t[1])));
    CHECK(g->element_order(comm) == 3);
  }

  CHECK(FiniteGroup::trivial()->generating_tuples(1) ==
        std::vector<std::vector<int>>{{0}});

  auto z4 = regular_abelian({4});
  for (const auto& t : z4.group->generating_tuples(2)) {
    bool has_generator = z4.group->element_order(t[0]) == 4 || z4.group->element_order(t[1]) == 4;
    CHECK(has_generator);
  }
}

TEST_CASE("json group spec") {
  auto s = group_from_json(R"({"abelian_invariants": [2, 2]})");
  CHECK(s.group->order() == 4);
  auto t = group_from_json(R"gg({"perm_generators": ["(1 2)", "(1 2 3)"]})gg");
  CHECK(t.group->order() == 6);
  CHECK_THROWS(group_from_json(R"({"nope": 1})"));
}
