#include "doctest.h"

#include "geninv/error.hpp"
#include "geninv/scalar.hpp"
#include "support/oracles.hpp"

using namespace geninv;

namespace {

Rational q(long p, long d) { return Rational(mpz_class(p), mpz_class(d)); }

bool canonical(const Rational& r) {
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return den > 0 && (num == 0 ? den == 1 : g == 1);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(3, -6).denominator() == 2);
  CHECK(q(3, -6).numerator() == -1);
  CHECK(q(0, -7).denominator() == 1);
  CHECK(q(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
  CHECK_THROWS_AS(q(1, 2) / Rational(0), DivisionByZero);
}

TEST_CASE("gaussian field operations") {
  const Gaussian i = Gaussian::i();
  CHECK(i * i == Gaussian(-1));
  CHECK(Gaussian(1, 1).inverse() == Gaussian(q(1, 2), q(-1, 2)));
  CHECK(Gaussian(q(1, 2)) + Gaussian(q(1, 3)) == Gaussian(q(5, 6)));
  CHECK((Gaussian(3, 4) / Gaussian(3, 4)).is_one());
  CHECK(-Gaussian(1, -2) == Gaussian(-1, 2));
  CHECK(Gaussian(3, 4).norm() == Rational(25));
  CHECK_THROWS_AS(Gaussian().inverse(), DivisionByZero);
  CHECK_THROWS_AS(Gaussian(1) / Gaussian(0), DivisionByZero);
}

TEST_CASE("field axioms on random scalars") {
  testing::Generator gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Gaussian x = gen.scalar(9, true);
    const Gaussian y = gen.scalar(9, true);
    const Gaussian z = gen.scalar(9, true);
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x * y == y * x);
    if (!x.is_zero()) REQUIRE((x * x.inverse()).is_one());
    const Gaussian w = x * y - z;
    REQUIRE(canonical(w.re()));
    REQUIRE(canonical(w.im()));
  }
}

TEST_CASE("parse scalars") {
  CHECK(parse_scalar("3/2-1/3i") == Gaussian(q(3, 2), q(-1, 3)));
  CHECK(parse_scalar("-i") == Gaussian(0, -1));
  CHECK(parse_scalar("i") == Gaussian::i());
  CHECK(parse_scalar("0") == Gaussian());
  CHECK(parse_scalar("-7") == Gaussian(-7));
  CHECK(parse_scalar("1+i") == Gaussian(1, 1));
  CHECK(parse_scalar("4/6") == Gaussian(q(2, 3)));
  CHECK(parse_scalar("2i") == Gaussian(0, 2));
  CHECK(parse_scalar("-1/3i") == Gaussian(Rational(0), q(-1, 3)));
}

TEST_CASE("malformed scalars report a position") {
  auto position_of = [](const char* text) -> long {
    try {
      parse_scalar(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("1/0") == 2);
  CHECK(position_of("1+2") == 3);
  CHECK(position_of("1x") == 1);
  CHECK(position_of("--1") == 1);
  CHECK(position_of("1+ix") == 3);
  CHECK(position_of("1/") == 2);
}

TEST_CASE("render then parse is the identity") {
  testing::Generator gen(12);
  for (int trial = 0; trial < 500; ++trial) {
    const Gaussian x = gen.scalar(20, trial % 2 == 0);
    REQUIRE(parse_scalar(render_scalar(x)) == x);
  }
  CHECK(render_scalar(Gaussian(q(3, 2), q(-1, 3))) == "3/2-1/3i");
  CHECK(render_scalar(Gaussian(0, -1)) == "-i");
  CHECK(render_scalar(Gaussian(1, 1)) == "1+i");
  CHECK(render_scalar(Gaussian()) == "0");
}
