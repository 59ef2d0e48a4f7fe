#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wordcount/cyclotomic.hpp"
#include "wordcount/error.hpp"

using namespace wordcount;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(8) == IntPoly{1, 0, 0, 0, 1});
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  const IntPoly& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
}

TEST_CASE("equality modulo Phi_e") {
  const std::size_t e = 3;
  const Cyclotomic sum = Cyclotomic::root(e, 0) + Cyclotomic::root(e, 1) + Cyclotomic::root(e, 2);
  CHECK(sum.is_zero());
  CHECK(sum == Cyclotomic(e));
  CHECK(Cyclotomic::root(4, 2) == Cyclotomic::integer(4, -1));
  CHECK_FALSE(Cyclotomic::root(4, 1) == Cyclotomic::root(4, 3));
  CHECK(Cyclotomic::root(4, 1).conj() == Cyclotomic::root(4, 3));
  CHECK(Cyclotomic::root(6, 1) * Cyclotomic::root(6, 5) == Cyclotomic::integer(6, 1));
  CHECK((Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2)).as_integer() == mpz_class(-1));
  CHECK_FALSE(Cyclotomic::root(3, 1).as_integer().has_value());
}

TEST_CASE("galois action and printing") {
  const Cyclotomic z = Cyclotomic::root(5, 1);
  CHECK(z.galois(2) == Cyclotomic::root(5, 2));
  CHECK(Cyclotomic::integer(5, 7).to_string() == "7");
  CHECK((z * mpz_class(2) - Cyclotomic::root(5, 3)).to_string() == "2*z^1-z^3");
}

TEST_CASE("mixed orders are rejected") {
  CHECK_THROWS_AS(Cyclotomic::root(3, 1) + Cyclotomic::root(4, 1), Error);
}
