#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "declab/errors.hpp"
#include "declab/rational.hpp"
#include "doctest.h"

using declab::DomainError;
using declab::ParseError;
using declab::Rat;

TEST_CASE("construction canonicalizes") {
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(1, -2).str() == "-1/2");
  CHECK(Rat(-4, -6).str() == "2/3");
  CHECK(Rat(0, 7).str() == "0");
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(7).str() == "7");
  CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("denominator positive and coprime") {
  const Rat r(-6, 8);
  CHECK(r.den() > 0);
  CHECK(mpz_class(gcd(r.num(), r.den())) == 1);
  CHECK(r.str() == "-3/4");
}

TEST_CASE("parse") {
  CHECK(Rat::parse("3") == Rat(3));
  CHECK(Rat::parse("-3") == Rat(-3));
  CHECK(Rat::parse("+3/6") == Rat(1, 2));
  CHECK(Rat::parse("-10/4") == Rat(-5, 2));
  CHECK(Rat::parse("123456789012345678901234567890/2") ==
        Rat(mpz_class("123456789012345678901234567890"), mpz_class(2)));
  CHECK_THROWS_AS(Rat::parse(""), ParseError);
  CHECK_THROWS_AS(Rat::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rat::parse("/2"), ParseError);
  CHECK_THROWS_AS(Rat::parse("a"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1 /2"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/0"), DomainError);
}

TEST_CASE("str parse round trip") {
  std::minstd_rand gen(7);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 500);
  for (int t = 0; t < 500; ++t) {
    const Rat r(num(gen), den(gen));
    CHECK(Rat::parse(r.str()) == r);
  }
}

TEST_CASE("arithmetic") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(2, 3) / Rat(4, 3) == Rat(1, 2));
  CHECK(-Rat(1, 2) == Rat(-1, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 3) > Rat(-1, 2));
  CHECK(Rat(1, 2) <= Rat(1, 2));
  CHECK(Rat(1, 2) != Rat(1, 3));
}

TEST_CASE("pow abs min max") {
  CHECK(Rat::pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(Rat::pow(Rat(2, 3), 0) == Rat(1));
  CHECK(Rat::pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK_THROWS_AS(Rat::pow(Rat(0), -1), DomainError);
  CHECK(Rat::abs(Rat(-3, 4)) == Rat(3, 4));
  CHECK(Rat::min(Rat(1, 3), Rat(1, 4)) == Rat(1, 4));
  CHECK(Rat::max(Rat(1, 3), Rat(1, 4)) == Rat(1, 3));
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Rat(1, 3).decimal(4) == "0.3333");
  CHECK(Rat(2, 3).decimal(4) == "0.6667");
  CHECK(Rat(1, 20).decimal(1) == "0.1");    // 0.05 rounds up
  CHECK(Rat(-1, 20).decimal(1) == "-0.1");  // -0.05 rounds away
  CHECK(Rat(-19, 12).decimal(3) == "-1.583");
  CHECK(Rat(5).decimal(2) == "5.00");
  CHECK(Rat(-1, 10000).decimal(2) == "0.00");  // sign dropped when all digits vanish
  CHECK(Rat(1999, 1000).decimal(2) == "2.00");
}

TEST_CASE("dbl and is_integer") {
  CHECK(Rat(1, 2).dbl() == 0.5);
  CHECK(Rat(7).is_integer());
  CHECK(!Rat(7, 2).is_integer());
  CHECK(Rat(0).sgn() == 0);
  CHECK(Rat(-2, 3).sgn() < 0);
}
