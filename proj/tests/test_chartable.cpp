#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coverhom/chartable.hpp"

using namespace coverhom;

namespace {
GroupPtr s3() {
  return FiniteGroup::from_generators(
      {Permutation::parse(3, "(1 2)"), Permutation::parse(3, "(1 2 3)")});
}
}  // namespace

TEST_CASE("class functions") {
  auto g = s3();
  auto triv = trivial_character(g);
  auto reg = regular_character(g);
  CHECK(triv.degree() == Cyclotomic(Rat(1)));
  CHECK(reg.degree() == Cyclotomic(Rat(6)));
  CHECK(reg.at_element(1) == Cyclotomic(Rat(0)));
  CHECK(inner_product(triv, triv) == Cyclotomic(Rat(1)));
  CHECK(inner_product(reg, triv) == Cyclotomic(Rat(1)));
  CHECK((triv + triv).degree() == Cyclotomic(Rat(2)));
  CHECK((reg - reg).at_class(0).is_zero());
  CHECK(triv.scaled(Rat(3)).degree() == Cyclotomic(Rat(3)));
}

TEST_CASE("character table of S3") {
  auto g = s3();
  auto t = CharTable::build(g);
  REQUIRE(t.size() == 3);
  CHECK(t.irreducible(0) == trivial_character(g));
  std::vector<long long> degrees;
  for (size_t i = 0; i < t.size(); ++i) degrees.push_back(t.degree(i));
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<long long>{1, 1, 2});
  // row orthogonality (also enforced at build time)
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = 0; j < t.size(); ++j)
      CHECK(inner_product(t.irreducible(i), t.irreducible(j)) ==
            Cyclotomic(Rat(i == j ? 1 : 0)));
  // regular character decomposition: chi_reg = sum d_i chi_i
  ClassFunction sum = t.irreducible(0).scaled(Rat(0));
  for (size_t i = 0; i < t.size(); ++i)
    sum = sum + t.irreducible(i).scaled(Rat(t.degree(i)));
  CHECK(sum == regular_character(g));
}

TEST_CASE("character table of abelian groups") {
  auto z3 = regular_abelian({3}).group;
  auto t = CharTable::build(z3);
  REQUIRE(t.size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(t.degree(i) == 1);
  // nontrivial characters take primitive cube root values
  bool found = false;
  for (size_t i = 1; i < 3; ++i)
    found |= t.irreducible(i).at_class(1) == Cyclotomic::zeta(3);
  CHECK(found);

  auto q = regular_abelian({2, 2}).group;
  auto tq = CharTable::build(q);
  REQUIRE(tq.size() == 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t c = 0; c < 4; ++c) {
      auto v = tq.irreducible(i).at_class((int)c).as_rational();
      REQUIRE(v.has_value());
      CHECK((*v == 1 || *v == -1));
    }
}

TEST_CASE("larger tables stay consistent") {
  // dihedral of order 8: 5 classes, degrees 1,1,1,1,2
  auto d4 = FiniteGroup::from_generators(
      {Permutation::parse(4, "(1 2 3 4)"), Permutation::parse(4, "(1 3)")});
  REQUIRE(d4->order() == 8);
  auto t = CharTable::build(d4);
  REQUIRE(t.size() == 5);
  long long sq = 0;
  for (size_t i = 0; i < t.size(); ++i) sq += t.degree(i) * t.degree(i);
  CHECK(sq == 8);

  // A4: 4 classes, degrees 1,1,1,3; the two nontrivial linear characters are
  // a Galois orbit
  auto a4 = FiniteGroup::from_generators(
      {Permutation::parse(4, "(1 2 3)"), Permutation::parse(4, "(1 2)(3 4)")});
  REQUIRE(a4->order() == 12);
  auto ta = CharTable::build(a4);
  REQUIRE(ta.size() == 4);
  auto orbits = ta.galois_orbits();
  size_t covered = 0;
  for (const auto& o : orbits) covered += o.size();
  CHECK(covered == ta.size());
  bool has_pair = false;
  for (const auto& o : orbits) has_pair |= o.size() == 2;
  CHECK(has_pair);
}

TEST_CASE("permutation characters and fixed spaces") {
  auto g = s3();
  int rot = g->index_of(Permutation::parse(3, "(1 2 3)"));
  auto a3 = g->subgroup({rot});
  auto chi = perm_character(*a3);
  CHECK(chi.degree() == Cyclotomic(Rat(2)));
  CHECK(inner_product(chi, trivial_character(g)) == Cyclotomic(Rat(1)));

  auto whole = g->subgroup(g->generator_indices());
  CHECK(perm_character(*whole) == trivial_character(g));

  auto t = CharTable::build(g);
  // the natural 3-point permutation character = trivial + standard
  int refl = g->index_of(Permutation::parse(3, "(2 3)"));
  auto stab = g->subgroup({refl});
  auto nat = perm_character(*stab);
  CHECK(nat.degree() == Cyclotomic(Rat(3)));
  for (size_t i = 0; i < t.size(); ++i) {
    auto m = inner_product(nat, t.irreducible(i)).as_rational();
    REQUIRE(m.has_value());
    if (t.degree(i) == 2) CHECK(*m == 1);
  }

  // fixed-space dimensions
  CHECK(fixed_space_dim(regular_character(g), *whole) == 1);
  CHECK(fixed_space_dim(nat, *a3) == 1);
  CHECK(fixed_space_dim(nat, *g->subgroup({})) == 3);
}

TEST_CASE("commutator-admissible irreducibles for S3") {
  auto g = s3();
  auto t = CharTable::build(g);
  Epimorphism phi(2, g, {g->generator_indices()[0], g->generator_indices()[1]});
  auto bounds = irr_comm_bounds(phi, t, 2);
  // lower is contained in upper
  for (size_t i : bounds.lower)
    CHECK(std::find(bounds.upper.begin(), bounds.upper.end(), i) != bounds.upper.end());
  // trivial character is always admitted: phi([a,b]) fixes everything in C_triv
  CHECK(std::find(bounds.lower.begin(), bounds.lower.end(), (size_t)0) != bounds.lower.end());
  // the 2-dimensional irreducible is excluded: every commutator of a
  // generating pair is a nontrivial rotation, which acts without fixed
  // vectors on the standard representation
  for (size_t i : bounds.upper) CHECK(t.degree(i) != 2);

  auto mult = multiplicity_bound_comm(phi, t, bounds);
  CHECK(mult.ceiling[0] == 0);  // trivial representation contributes nothing
  CHECK(mult.total_dimension <= 2);
}
