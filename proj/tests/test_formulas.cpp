#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "declab/errors.hpp"
#include "declab/formulas.hpp"
#include "doctest.h"

using namespace declab;

TEST_CASE("gamma8 branch values") {
  CHECK(gamma8(Rat(1, 2)) == Rat(-1, 5));
  CHECK(gamma8(Rat(2, 3)) == Rat(-5, 28));
  CHECK(gamma8(Rat(4, 5)) == Rat(-139, 880));
  CHECK(gamma8(Rat(1, 4)) == Rat(1, 40) - Rat(1, 4));
  CHECK_THROWS_AS(gamma8(Rat(0)), DomainError);
  CHECK_THROWS_AS(gamma8(Rat(1)), DomainError);
}

TEST_CASE("phi values and the gamma8 identity") {
  CHECK(phi(Rat(2, 3)) == Rat(4, 7));
  CHECK(phi(Rat(3, 5)) == Rat(1, 2));
  CHECK(phi(Rat(4, 5)) == Rat(81, 110));
  CHECK(phi(Rat(501, 1000)) == Rat(334, 833));  // just above 2/5 at the left edge
  CHECK_THROWS_AS(phi(Rat(1, 2)), DomainError);
  for (int j = 51; j <= 99; ++j) {
    const Rat a(j, 100);
    CHECK(8 * gamma8(a) == phi(a) - 2);
  }
}

TEST_CASE("small-alpha gamma8 linearization") {
  for (int j = 1; j <= 50; ++j) {
    const Rat a(j, 100);
    CHECK(8 * gamma8(a) + 2 == 4 * a / 5);
  }
}

TEST_CASE("gamma_p interpolation") {
  CHECK(gamma_p(Rat(6), Rat(1, 2)) == Rat(-3, 10));
  CHECK(gamma_p(Rat(16), Rat(1, 2)) == Rat(-3, 80));
  CHECK(Rat(-3, 80) < Rat(-1, 32));
  for (const Rat& a : {Rat(1, 10), Rat(1, 2), Rat(7, 8)}) {
    CHECK(gamma_p(Rat(8), a) == gamma8(a));
  }
  CHECK_THROWS_AS(gamma_p(Rat(4), Rat(1, 2)), DomainError);
}

TEST_CASE("gamma_dec values and route agreement") {
  CHECK(gamma_dec(Rat(8), Rat(1, 2)) == Rat(1, 40));
  for (int j = 1; j <= 99; ++j) {
    const Rat a(j, 100);
    CHECK(gamma_dec(Rat(8), a) == (gamma8(a) + Rat(1, 4)) / 2);
  }
  CHECK(gamma_dec(Rat(12), Rat(1, 2)) ==
        Rat(6, 8) * (Rat(1, 6) + gamma_p(Rat(12), Rat(1, 2))));
  CHECK_THROWS_AS(gamma_dec(Rat(6), Rat(1, 2)), DomainError);
}

TEST_CASE("c_exponent value and caps") {
  const Rat c = c_exponent(Rat(8), Rat(1, 2));
  CHECK(c == Rat(1, 40));
  const BoundsReport r = bounds_report(Rat(8), Rat(1, 2));
  CHECK(r.gamma_lower == Rat(-1, 4));
  CHECK(r.c_upper_energy == Rat(1, 4));
  CHECK(r.c_upper_trivial == Rat(1, 8));
  CHECK(r.c_upper_interference == Rat(3, 8));
  CHECK(r.c_conjecture == Rat(1, 8));
  CHECK(r.gamma_exceeds_lower);
  REQUIRE(r.c_below_conjecture.has_value());
  CHECK(*r.c_below_conjecture);
  CHECK(c <= r.c_conjecture);
}

TEST_CASE("strict inequalities on a dense grid") {
  const std::vector<Rat> ps = {Rat(13, 2), Rat(7), Rat(8), Rat(10), Rat(16), Rat(50)};
  for (int j = 1; j <= 99; ++j) {
    const Rat a(j, 100);
    CHECK(gamma8(a) < a / 8 - Rat(1, 4));
    for (const Rat& p : ps) {
      const Rat gd = gamma_dec(p, a);
      const Rat c = c_exponent(p, a);
      CHECK(c > 0);
      CHECK(c == (Rat(1, 2) - 3 / p) - (2 / a) * gd);
      CHECK(gamma_p(p, a) < a * (Rat(1, 4) - 1 / p) - 2 / p);
      const Rat xi = 2 / (p - 2), eta = (p - 6) / (p * (p - 2));
      CHECK(gd == (gamma_p(p, a) * (1 - 2 * xi) + 2 * eta) / (1 - xi));
    }
  }
}

TEST_CASE("make_params") {
  const FormulaParams fp = make_params(Rat(8), Rat(1, 2));
  CHECK(fp.xi == Rat(1, 3));
  CHECK(fp.eta == Rat(1, 24));
  CHECK(fp.gamma8 == Rat(-1, 5));
  CHECK(!fp.phi.has_value());
  CHECK(fp.gamma_p == Rat(-1, 5));
  REQUIRE(fp.gamma_dec.has_value());
  CHECK(*fp.gamma_dec == Rat(1, 40));
  REQUIRE(fp.c_exp.has_value());
  CHECK(*fp.c_exp == Rat(1, 40));
  CHECK(fp.psi1 == fp.gamma_p);
  CHECK(fp.rho == Rat(1, 3));
  CHECK(fp.a_const == Rat(2, 3));
  CHECK(fp.e_const == Rat(0));

  const FormulaParams low = make_params(Rat(5), Rat(1, 3));
  CHECK(low.xi == Rat(2, 3));
  CHECK(!low.gamma_dec.has_value());
  CHECK(!low.c_exp.has_value());
  CHECK(!low.phi.has_value());

  const FormulaParams high = make_params(Rat(8), Rat(3, 4));
  REQUIRE(high.phi.has_value());
  CHECK(*high.phi == phi(Rat(3, 4)));

  CHECK_THROWS_AS(make_params(Rat(4), Rat(1, 2)), DomainError);
  CHECK_THROWS_AS(make_params(Rat(8), Rat(1)), DomainError);
}

TEST_CASE("bootstrap recursion") {
  const Rat psi1 = gamma_p(Rat(8), Rat(1, 2));
  const auto rows = bootstrap_iterate(Rat(8), Rat(1, 2), psi1, 30);
  REQUIRE(rows.size() == 31);
  CHECK(rows[0].s == 0);
  CHECK(rows[0].scale == Rat(1));
  CHECK(rows[0].psi == psi1);
  CHECK(rows[0].bildec == psi1 + Rat(1, 4));
  for (const auto& row : rows) CHECK(row.closed == row.psi);
  CHECK(rows[1].scale == Rat(1, 3));
  const double tail = (rows[30].bildec - Rat(1, 40)).dbl();
  CHECK(tail < 1e-6);
  CHECK(tail > -1e-6);
  CHECK_THROWS_AS(bootstrap_iterate(Rat(8), Rat(1, 2), psi1, -1), DomainError);
  CHECK_THROWS_AS(bootstrap_iterate(Rat(6), Rat(1, 2), psi1, 5), DomainError);
}

TEST_CASE("cantor bootstrap bounds") {
  const CantorBootstrap a = cantor_bootstrap(Rat(8), Rat(1, 2), Rat(1, 6), Rat(-1, 4));
  CHECK(a.xi == Rat(1, 2));
  CHECK(a.eta == Rat(1, 96));
  CHECK(a.limit_bound == Rat(1, 24));
  CHECK(a.s0_bound == Rat(0));
  CHECK(a.s0_applicable);
  CHECK(a.best == Rat(0));

  const CantorBootstrap b = cantor_bootstrap(Rat(9), Rat(1, 2), Rat(1, 6), Rat(-1, 5));
  CHECK(b.s0_bound == Rat(1, 45));
  CHECK(b.limit_bound == Rat(1, 24));
  CHECK(b.s0_applicable);
  CHECK(b.best == Rat(1, 45));

  const CantorBootstrap c = cantor_bootstrap(Rat(8), Rat(1, 2), Rat(1, 6), Rat(0));
  CHECK(!c.s0_applicable);
  CHECK(c.best == Rat(1, 24));

  CHECK_THROWS_AS(cantor_bootstrap(Rat(6), Rat(1, 2), Rat(1, 6), Rat(0)), DomainError);
}
