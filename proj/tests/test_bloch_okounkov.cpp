#include "lgcy/bloch_okounkov.hpp"
#include "lgcy/modular_forms.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace lgcy;

namespace {

// q-expansions through q^12 of (q)_inf times the disconnected stationary functions,
// produced by tests/oracles/partition_oracle.py from the partition sum.
struct OracleRow {
  std::vector<int> legs;
  std::vector<std::string> coefficients;
};

const std::vector<OracleRow>& partition_oracle() {
  static const std::vector<OracleRow> rows = {
      {{0}, {"-1/24", "1", "3", "4", "7", "6", "12", "8", "15", "13", "18", "12", "28"}},
      {{2},
       {"7/5760", "1/24", "9/8", "31/6", "343/24", "117/4", "111/2", "259/3", "1125/8", "4597/24", "1143/4", "711/2",
        "3073/6"}},
      {{0, 0}, {"1/576", "11/12", "27/4", "53/3", "533/12", "135/2", "141", "514/3", "1215/4", "4487/12", "1125/2", "621", "3059/3"}},
      {{1, 1}, {"0", "0", "2", "16", "60", "160", "360", "672", "1240", "1920", "3180", "4400", "6832"}},
      {{0, 2},
       {"-7/138240", "79/1920", "1439/640", "7939/480", "125353/1920", "57479/320", "69059/160", "202699/240",
        "209135/128", "5183347/1920", "1471557/320", "1090259/160", "5187973/480"}},
      {{-1, 1}, {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
      {{0, 0, 0},
       {"-1/13824", "169/192", "905/64", "2965/48", "41743/192", "14897/32", "18629/16", "45325/24", "242365/64",
        "1104037/192", "312051/32", "212549/16", "1075795/48"}},
      {{1, 1, 0},
       {"0", "0", "47/12", "148/3", "519/2", "2728/3", "2563", "5880", "38401/3", "23584", "88707/2", "214940/3",
        "368326/3"}},
      {{0, 0, 0, 0},
       {"1/331776", "2915/3456", "32915/1152", "172385/864", "3346445/3456", "1597655/576", "2421065/288",
        "7386965/432", "45447175/1152", "245558255/3456", "26120615/192", "62317865/288", "339914855/864"}},
  };
  return rows;
}

PowerSeries from_strings(const std::vector<std::string>& c) {
  std::vector<Rational> v;
  for (const auto& s : c) v.push_back(parse_rational(s));
  return PowerSeries(Variable::q, std::move(v));
}

const QMPolynomial E2 = QMPolynomial::E2(), E4 = QMPolynomial::E4(), E6 = QMPolynomial::E6();

}  // namespace

TEST_CASE("Weierstrass a-table") {
  const WeierstrassTable a = weierstrass_a(12);
  CHECK(a.at(0, 0) == 1);
  CHECK(a.at(1, 0) == -1);
  CHECK(a.at(0, 1) == -3);
  CHECK(a.at(2, 0) == -9);
  CHECK(a.at(1, 1) == -18);
  CHECK(a.at(3, 0) == 69);
  CHECK(a.at(0, 2) == -54);
  CHECK(a.at(-1, 2) == 0);
  CHECK_THROWS_AS(a.at(4, 0), std::out_of_range);
}

TEST_CASE("b-table") {
  const WeierstrassTable b = b_table(12);
  CHECK(b.at(0, 0) == 1);
  CHECK(b.at(1, 0) == rat(1, 120));
  CHECK(b.at(0, 1) == rat(1, 1680));
}

TEST_CASE("sigma from Eisenstein series equals sigma from the a-table") {
  CHECK(sigma_tilde(17) == sigma_tilde_weierstrass(17));
  const ZLaurent theta = prime_form(9);
  CHECK(theta.valuation() == 1);
  CHECK(theta.coefficient(1) == QMPolynomial(1));
  CHECK(theta.coefficient(2).is_zero());
  CHECK(theta.coefficient(3) == E2 * rat(1, 24));
  for (int n = 1; n <= 9; ++n) {
    const QMPolynomial c = theta.coefficient(n);
    if (!c.is_zero()) CHECK(c.weight() == n - 1);
  }
}

TEST_CASE("one over theta and log derivatives") {
  const ZLaurent inv = one_over_theta(8);
  CHECK(inv.valuation() == -1);
  CHECK(inv.order() == 7);
  CHECK((inv * prime_form(10)).coefficient(0) == QMPolynomial(1));
  CHECK((inv * prime_form(10)).coefficient(4).is_zero());
  const ZLaurent d1 = log_theta_deriv(1, 6);
  CHECK(d1.valuation() == -1);
  CHECK(d1.coefficient(-1) == QMPolynomial(1));
  CHECK(d1.coefficient(1) == E2 * rat(1, 12));
}

TEST_CASE("stationary functions agree with the partition oracle") {
  for (const auto& row : partition_oracle()) {
    CAPTURE(row.legs.size());
    CAPTURE(row.legs.front());
    const QMPolynomial value = stationary_invariant(row.legs);
    CHECK(qm_eval(value, 12) == from_strings(row.coefficients));
  }
}

TEST_CASE("one-point functions") {
  const int zero[] = {0};
  CHECK(stationary_invariant(zero) == E2 * rat(-1, 24));
  const int minus_two[] = {-2};
  CHECK(stationary_invariant(minus_two) == QMPolynomial(1));
  const int minus_one[] = {-1};
  CHECK(stationary_invariant(minus_one).is_zero());
  const int two[] = {2};
  CHECK(stationary_invariant(two) == E2 * E2 * rat(1, 1152) + E4 * rat(1, 2880));
}

TEST_CASE("two-point function from the determinant equals the closed form") {
  CHECK(npoint(2, 8) == npoint_two_closed_form(8));
}

TEST_CASE("n-point tables are symmetric and graded by weight") {
  const MultiZPoly t = npoint(3, 7);
  for (const auto& [e, c] : t.terms()) {
    int w = 0;
    for (int x : e) w += x + 1;
    CHECK(w <= 7);
    CHECK(c.weight() == w);
    auto p = e;
    std::sort(p.begin(), p.end());
    do {
      CHECK(t.coefficient(p) == c);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const int over[] = {5, 5, 5};
  CHECK_THROWS_AS(t.coefficient(over), std::out_of_range);
  const int below[] = {-2, 0, 0};
  CHECK(t.coefficient(below).is_zero());
  CHECK_THROWS(npoint(kMaxLegs + 1, 4));
  CHECK_THROWS(npoint(0, 4));
}

TEST_CASE("ray interpolation rejects terms above the total degree") {
  // G(a t) = a_1^2 t is not the restriction of a homogeneous polynomial of degree 1
  const RayEvaluator bad = [](std::span<const Rational> a, int) {
    return ZLaurent::monomial(Variable::z, 1, QMPolynomial(a[0] * a[0]), 2);
  };
  CHECK_THROWS_AS(npoint_from_evaluator(2, 2, bad), std::logic_error);
  const RayEvaluator good = [](std::span<const Rational> a, int) {
    return ZLaurent::monomial(Variable::z, 2, QMPolynomial(a[0] * a[1]), 2);
  };
  const int e[] = {0, 0};
  CHECK(npoint_from_evaluator(2, 2, good).coefficient(e) == QMPolynomial(1));
}

TEST_CASE("connected functions") {
  const std::vector<int> pair = {0, 0};
  CHECK(connected_from_disconnected(pair, disconnected_table(pair)) == (E4 - E2 * E2) * rat(1, 288));
  const std::vector<int> single = {1};
  CHECK(connected_from_disconnected(single, disconnected_table(single)).is_zero());
  const std::vector<int> triple = {0, 0, 0};
  const QMPolynomial c3 = connected_from_disconnected(triple, disconnected_table(triple));
  // sum n^2 sigma_1(n) q^n
  PowerSeries expected(Variable::q, 10);
  for (int n = 1; n <= 10; ++n) expected[n] = Rational(divisor_sigma(1, n)) * n * n;
  CHECK(qm_eval(c3, 10) == expected);
  DisconnectedTable partial;
  partial[{0}] = E2;
  CHECK_THROWS_AS(connected_from_disconnected(pair, partial), MissingSubtable);
}

TEST_CASE("low Laurent coefficients") {
  const ZLaurent s = sigma_tilde(9);
  CHECK(s.coefficient(1) == QMPolynomial(1));
  CHECK(s.coefficient(5) == E4 * rat(-1, 2880));
  for (int k = 0; k <= 4; ++k) CHECK(s.coefficient(2 * k).is_zero());
  const ZLaurent inv = one_over_theta(6);
  CHECK(inv.coefficient(-1) == QMPolynomial(1));
  CHECK(inv.coefficient(1) == E2 * rat(-1, 24));
  CHECK(inv.coefficient(3) == (E4 * rat(1, 5) + E2 * E2 * rat(1, 2)) * rat(1, 576));
  const WeierstrassTable b = b_table(4);
  CHECK(inv.coefficient(3) == E2 * E2 * rat(1, 1152) + E4 * rat(1, 24) * b.at(1, 0));
  CHECK(log_theta_deriv(2, 6).coefficient(-2) == QMPolynomial(-1));
  const MultiZPoly one = npoint(1, 8);
  for (int e = -1; e <= 7; ++e) {
    const int ex[] = {e};
    CHECK(one.coefficient(ex) == one_over_theta(8).coefficient(e));
  }
}
