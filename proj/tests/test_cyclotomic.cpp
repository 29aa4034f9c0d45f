#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coverhom/cyclotomic.hpp"

using namespace coverhom;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{Int(-1), Int(1)});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{Int(1), Int(1)});
  CHECK(cyclotomic_polynomial(3) == std::vector<Int>{Int(1), Int(1), Int(1)});
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{Int(1), Int(0), Int(1)});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{Int(1), Int(-1), Int(1)});
  CHECK(cyclotomic_polynomial(12) ==
        std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(1)});
}

TEST_CASE("roots of unity") {
  auto z3 = Cyclotomic::zeta(3);
  CHECK((z3 * z3 * z3) == Cyclotomic(Rat(1)));
  // 1 + z + z^2 = 0 for the primitive cube root
  CHECK((Cyclotomic(Rat(1)) + z3 + z3 * z3).is_zero());

  auto z4 = Cyclotomic::zeta(4);
  CHECK((z4 * z4) == Cyclotomic(Rat(-1)));
  CHECK(Cyclotomic::zeta(4, 2) == Cyclotomic(Rat(-1)));
  CHECK(Cyclotomic::zeta(6, 3) == Cyclotomic(Rat(-1)));
  CHECK(Cyclotomic::zeta(5, 5) == Cyclotomic(Rat(1)));
}

TEST_CASE("rationality detection") {
  CHECK(Cyclotomic(Rat(7, 3)).is_rational());
  CHECK(*Cyclotomic(Rat(7, 3)).as_rational() == Rat(7, 3));
  CHECK_FALSE(Cyclotomic::zeta(5).is_rational());
  // zeta_2 reduces to -1
  auto z2 = Cyclotomic::zeta(2);
  CHECK(z2.is_rational());
  CHECK(*z2.as_rational() == Rat(-1));
  CHECK((Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3) +
         Cyclotomic::zeta(5, 4)) == Cyclotomic(Rat(-1)));
}

TEST_CASE("mixed conductor arithmetic") {
  auto z3 = Cyclotomic::zeta(3);
  auto z4 = Cyclotomic::zeta(4);
  auto prod = z3 * z4;             // a primitive 12th root of unity
  Cyclotomic p = Cyclotomic(Rat(1));
  for (int i = 0; i < 12; ++i) p *= prod;
  CHECK(p == Cyclotomic(Rat(1)));
  CHECK((z3 + z4 - z4) == z3);
  CHECK(z3.lift(12) == z3);
  CHECK(Cyclotomic::zeta(12, 4) == z3);
}

TEST_CASE("galois action and conjugation") {
  auto z5 = Cyclotomic::zeta(5);
  CHECK(z5.galois(2) == Cyclotomic::zeta(5, 2));
  CHECK(z5.conj() == Cyclotomic::zeta(5, 4));
  CHECK((z5 * z5.conj()) == Cyclotomic(Rat(1)));
  CHECK_THROWS(z5.galois(5));
  // conjugation fixes rationals
  CHECK(Cyclotomic(Rat(3, 2)).conj() == Cyclotomic(Rat(3, 2)));
  // galois distributes over sums and products
  auto a = Cyclotomic::zeta(12) + Cyclotomic(Rat(2));
  auto b = Cyclotomic::zeta(12, 5);
  CHECK((a + b).galois(7) == a.galois(7) + b.galois(7));
  CHECK((a * b).galois(7) == a.galois(7) * b.galois(7));
}

TEST_CASE("ordering is a deterministic total order") {
  auto x = Cyclotomic::zeta(3);
  auto y = Cyclotomic::zeta(3, 2);
  CHECK(x != y);
  CHECK((x < y) != (y < x));
  CHECK_FALSE(x < x);
  CHECK((Cyclotomic(Rat(0)) < Cyclotomic(Rat(1))) !=
        (Cyclotomic(Rat(1)) < Cyclotomic(Rat(0))));
}

TEST_CASE("string form") {
  CHECK(Cyclotomic(Rat(0)).str() == "0");
  CHECK(!Cyclotomic::zeta(8).str().empty());
}
