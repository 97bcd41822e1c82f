#include "lgcy/laurent_series.hpp"
#include "lgcy/modular_forms.hpp"
#include "lgcy/power_series.hpp"

#include <doctest.h>

#include <random>

using namespace lgcy;

namespace {

PowerSeries random_series(std::mt19937& rng, Variable v, int order, bool zero_constant = false) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  PowerSeries p(v, order);
  for (int n = zero_constant ? 1 : 0; n <= order; ++n) p[n] = rat(num(rng), den(rng));
  return p;
}

PowerSeries q_series(std::initializer_list<long> c, int order) {
  PowerSeries p(Variable::q, order);
  int i = 0;
  for (long v : c) p[i++] = v;
  return p;
}

}  // namespace

TEST_CASE("rationals are canonical and print as fractions") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(to_fraction_string(rat(-6, 4)) == "-3/2");
  CHECK(to_fraction_string(Rational(5)) == "5/1");
  CHECK(parse_rational("-7/21") == rat(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(bernoulli(2) == rat(1, 6));
  CHECK(bernoulli(4) == rat(-1, 30));
  CHECK(bernoulli(6) == rat(1, 42));
  CHECK(pochhammer(rat(1, 3), 2) == rat(4, 9));
  CHECK(pochhammer(5, 0) == 1);
}

TEST_CASE("multiplication examples") {
  CHECK(q_series({1, 1}, 5) * q_series({1, -1}, 5) == q_series({1, 0, -1}, 5));
  std::mt19937 rng(1);
  const PowerSeries f = random_series(rng, Variable::q, 8);
  CHECK(f * PowerSeries::constant(Variable::q, 1, 8) == f);
  PowerSeries geo(Variable::q, 12);
  for (int n = 0; n <= 12; ++n) geo[n] = 1;
  CHECK(geo * q_series({1, -1}, 12) == PowerSeries::constant(Variable::q, 1, 12));
}

TEST_CASE("truncations combine to the minimum and variables must match") {
  const PowerSeries a = PowerSeries::constant(Variable::q, 1, 10);
  const PowerSeries b = PowerSeries::constant(Variable::q, 1, 4);
  CHECK((a + b).order() == 4);
  CHECK((a * b).order() == 4);
  CHECK_THROWS_AS(a * PowerSeries::constant(Variable::s, 1, 4), VariableMismatch);
  CHECK_THROWS_AS(a + PowerSeries::constant(Variable::s, 1, 4), VariableMismatch);
}

TEST_CASE("exp, log, reciprocal and derive examples") {
  CHECK(exp(PowerSeries(Variable::q, 6)) == PowerSeries::constant(Variable::q, 1, 6));
  const int d = 14;
  const PowerSeries lg = log(reciprocal(euler_function(d)));
  for (int n = 1; n <= d; ++n) CHECK(lg[n] == Rational(divisor_sigma(1, static_cast<unsigned long>(n))) / n);
  CHECK(derive(eisenstein(2, 5), DeriveMode::theta_q)[1] == -24);
  CHECK_THROWS_AS(reciprocal(q_series({0, 1}, 3)), SeriesDomainError);
  CHECK_THROWS_AS(exp(q_series({1, 1}, 3)), SeriesDomainError);
  CHECK_THROWS_AS(log(q_series({2, 1}, 3)), SeriesDomainError);
  CHECK_THROWS_AS(compose(q_series({1, 1}, 3), q_series({1, 1}, 3)), SeriesDomainError);
  CHECK_THROWS_AS(derive(q_series({1, 1}, 3), DeriveMode::d_ds), VariableMismatch);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const PowerSeries a = random_series(rng, Variable::s, 10);
    const PowerSeries b = random_series(rng, Variable::s, 10);
    const PowerSeries c = random_series(rng, Variable::s, 10);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("exp and log are inverse") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const PowerSeries g = random_series(rng, Variable::x, 9, true);
    CHECK(log(exp(g)) == g);
    PowerSeries f = random_series(rng, Variable::x, 9);
    f[0] = 1;
    CHECK(exp(log(f)) == f);
  }
}

TEST_CASE("derive is a derivation in both modes") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const PowerSeries f = random_series(rng, Variable::q, 9), g = random_series(rng, Variable::q, 9);
    CHECK(derive(f * g, DeriveMode::theta_q) ==
          derive(f, DeriveMode::theta_q) * g + f * derive(g, DeriveMode::theta_q));
    const PowerSeries u = random_series(rng, Variable::s, 9), v = random_series(rng, Variable::s, 9);
    CHECK(derive(u * v, DeriveMode::d_ds) ==
          derive(u, DeriveMode::d_ds) * v.truncated(8) + u.truncated(8) * derive(v, DeriveMode::d_ds));
  }
}

TEST_CASE("compose agrees with naive power sums") {
  std::mt19937 rng(5);
  const PowerSeries f = random_series(rng, Variable::t, 6);
  PowerSeries g = random_series(rng, Variable::t, 6, true);
  g[1] = rat(3, 2);
  PowerSeries naive(Variable::t, 6);
  PowerSeries power = PowerSeries::constant(Variable::t, 1, 6);
  for (int i = 0; i <= 6; ++i) {
    naive += power * f[i];
    power = power * g;
  }
  CHECK(compose(f, g) == naive);
  const PowerSeries h = reversion(g);
  CHECK(compose(g, h) == PowerSeries::identity(Variable::t, 6));
}

TEST_CASE("Laurent reciprocal") {
  const auto z = LaurentSeries<Rational>::monomial(Variable::z, 1, 1, 8);
  const auto inv = reciprocal(z);
  CHECK(inv.valuation() == -1);
  CHECK(inv.coefficient(-1) == 1);
  const Rational c = rat(3, 7);
  const LaurentSeries<Rational> a(Variable::z, 1, 8, {Rational(1), Rational(0), Rational(c / 24)});
  const auto r = reciprocal(a);
  CHECK(r.coefficient(-1) == 1);
  CHECK(r.coefficient(1) == -c / 24);
  CHECK(r.coefficient(3) == c * c / 576);
  CHECK(reciprocal(r) == a);
  CHECK_THROWS_AS(reciprocal(LaurentSeries<Rational>::zero(Variable::z, 4)), SeriesDomainError);
}

TEST_CASE("Laurent products track the known range") {
  const LaurentSeries<Rational> a(Variable::z, -1, 5, {1, 0, 2});
  const LaurentSeries<Rational> b(Variable::z, 0, 3, {1, 1});
  const auto p = a * b;
  CHECK(p.valuation() == -1);
  CHECK(p.order() == std::min(5 + 0, 3 - 1));
  CHECK(p.coefficient(0) == 1);
  CHECK(p.coefficient(1) == 2);
  CHECK_THROWS_AS(p.coefficient(3), std::out_of_range);
}
