#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coverhom/linalg.hpp"

using namespace coverhom;

namespace {
RatMat m2(long long a, long long b, long long c, long long d) {
  return {{Rat(a), Rat(b)}, {Rat(c), Rat(d)}};
}
}  // namespace

TEST_CASE("matrix arithmetic") {
  auto id = mat_identity(2);
  auto a = m2(1, 2, 3, 4);
  CHECK(mat_equal(mat_mul(a, id), a));
  CHECK(mat_equal(mat_mul(id, a), a));
  CHECK(mat_equal(mat_add(a, mat_scale(Rat(-1), a)), m2(0, 0, 0, 0)));
  CHECK(mat_trace(a) == Rat(5));
  CHECK(mat_rank(a) == 2);
  CHECK(mat_rank(m2(1, 2, 2, 4)) == 1);
  CHECK(mat_apply(a, RatVec{Rat(1), Rat(1)}) == RatVec{Rat(3), Rat(7)});
}

TEST_CASE("matrix inverse") {
  auto a = m2(2, 1, 1, 1);
  CHECK(mat_equal(mat_mul(a, mat_inverse(a)), mat_identity(2)));
  CHECK_THROWS(mat_inverse(m2(1, 2, 2, 4)));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    RatMat m(3, RatVec(3));
    for (auto& row : m)
      for (auto& x : row) x = Rat((long long)(rng() % 11) - 5);
    if (mat_rank(m) < 3) continue;
    CHECK(mat_equal(mat_mul(mat_inverse(m), m), mat_identity(3)));
  }
}

TEST_CASE("rref is canonical") {
  RatMat rows = {{Rat(0), Rat(2), Rat(4)}, {Rat(1), Rat(1), Rat(1)}};
  auto r = rref(rows);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == RatVec{Rat(1), Rat(0), Rat(-1)});
  CHECK(r[1] == RatVec{Rat(0), Rat(1), Rat(2)});
  // order of input rows does not matter
  std::swap(rows[0], rows[1]);
  CHECK(rref(rows) == r);
  // zero rows dropped
  CHECK(rref({{Rat(0), Rat(0)}}).empty());
}

TEST_CASE("subspace membership and coordinates") {
  auto s = Subspace::span(3, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}});
  CHECK(s.dim() == 2);
  CHECK(s.contains(RatVec{Rat(2), Rat(3), Rat(5)}));
  CHECK_FALSE(s.contains(RatVec{Rat(1), Rat(0), Rat(0)}));
  auto c = s.coordinates(RatVec{Rat(2), Rat(3), Rat(5)});
  REQUIRE(c.has_value());
  CHECK(*c == RatVec{Rat(2), Rat(3)});
  CHECK_FALSE(s.coordinates(RatVec{Rat(0), Rat(0), Rat(1)}).has_value());

  Subspace zero(3);
  CHECK(zero.dim() == 0);
  CHECK(zero.contains(RatVec{Rat(0), Rat(0), Rat(0)}));
}

TEST_CASE("sum and intersection satisfy the dimension identity") {
  std::mt19937 rng(13);
  auto random_space = [&](size_t ambient, int nvecs) {
    RatMat vecs;
    for (int i = 0; i < nvecs; ++i) {
      RatVec v(ambient);
      for (auto& x : v) x = Rat((long long)(rng() % 7) - 3);
      vecs.push_back(std::move(v));
    }
    return Subspace::span(ambient, vecs);
  };
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_space(5, (int)(rng() % 4));
    auto b = random_space(5, (int)(rng() % 4));
    auto s = a.sum(b);
    auto i = a.intersect(b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(s.contains_subspace(a));
    CHECK(s.contains_subspace(b));
    CHECK(a.contains_subspace(i));
    CHECK(b.contains_subspace(i));
    for (const auto& v : i.basis()) {
      CHECK(a.contains(v));
      CHECK(b.contains(v));
    }
    // equality is symmetric and matches containment both ways
    CHECK(s.equal(b.sum(a)));
    CHECK(i.equal(b.intersect(a)));
  }
}

TEST_CASE("indivisible representatives") {
  CHECK(make_indivisible(RatVec{Rat(2, 3), Rat(4, 3)}) == IntVec{Int(1), Int(2)});
  CHECK(make_indivisible(RatVec{Rat(-2), Rat(4)}) == IntVec{Int(1), Int(-2)});
  CHECK(make_indivisible(RatVec{Rat(0), Rat(-5)}) == IntVec{Int(0), Int(1)});
  CHECK_THROWS(make_indivisible(RatVec{Rat(0), Rat(0)}));
  CHECK(is_integral(RatVec{Rat(3), Rat(-7)}));
  CHECK_FALSE(is_integral(RatVec{Rat(1, 2)}));
  CHECK(content_gcd(IntVec{Int(6), Int(-9)}) == 3);
}
