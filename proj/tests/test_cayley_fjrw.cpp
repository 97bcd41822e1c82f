#include "lgcy/bloch_okounkov.hpp"
#include "lgcy/cayley_fjrw.hpp"
#include "lgcy/chazy.hpp"
#include "lgcy/modular_forms.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

using namespace lgcy;

namespace {

// s^0..s^11 of the frame, from tests/oracles/chazy_oracle.py (independent Chazy recursion
// in Python fractions).
const std::vector<std::string> kCE2 = {"0", "0", "-1/9", "0", "0", "-1/1215", "0", "0", "-1/459270", "0", "0", "-13/1364031900"};
const std::vector<std::string> kCE4 = {"0", "8/3", "0", "0", "5/81", "0", "0", "2/5103", "0", "0", "1/413343", "0"};
const std::vector<std::string> kCE6 = {"-8", "0", "0", "-28/27", "0", "0", "-7/405", "0", "0", "-17/98415", "0", "0"};

PowerSeries s_series(const std::vector<std::string>& c) {
  std::vector<Rational> v;
  for (const auto& x : c) v.push_back(parse_rational(x));
  return PowerSeries(Variable::s, std::move(v));
}

const CayleyFrame& frame() {
  static const CayleyFrame f = cayley_frame(20);
  return f;
}

FjrwInsertion phi(int psi) { return {FjrwLabel::phi, psi}; }

}  // namespace

TEST_CASE("frame golden coefficients") {
  const CayleyFrame f = cayley_frame(13);
  CHECK(f.e2.truncated(11) == s_series(kCE2));
  CHECK(f.e4.truncated(11) == s_series(kCE4));
  CHECK(f.e6.truncated(11) == s_series(kCE6));
  CHECK(f.order() == 11);
  CHECK_THROWS(cayley_frame(2));
}

TEST_CASE("frame solves Chazy and the Ramanujan system in s") {
  const CayleyFrame& f = frame();
  CHECK(chazy_residual(f.e2, DeriveMode::d_ds).is_zero());
  const int d = f.order() - 1;
  const auto ds = [](const PowerSeries& p) { return derive(p, DeriveMode::d_ds); };
  CHECK((ds(f.e2) * Rational(12)).truncated(d) == (f.e2 * f.e2 - f.e4).truncated(d));
  CHECK((ds(f.e4) * Rational(3)).truncated(d) == (f.e2 * f.e4 - f.e6).truncated(d));
  CHECK((ds(f.e6) * Rational(2)).truncated(d) == (f.e2 * f.e6 - f.e4 * f.e4).truncated(d));
}

TEST_CASE("cayley_transform") {
  CHECK(cayley_transform(QMPolynomial(1), frame()).truncated(10) == PowerSeries::constant(Variable::s, 1, 10));
  CHECK(cayley_transform(QMPolynomial::C2(), frame()).truncated(12) == fjrw_genus1_series(12));
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> num(-4, 4);
  for (int w = 2; w <= 10; w += 2) {
    QMPolynomial p;
    for (const auto& m : weight_basis(w)) p.add_term(m, num(rng));
    const PowerSeries lhs = derive(cayley_transform(p, frame()), DeriveMode::d_ds);
    const PowerSeries rhs = cayley_transform(ramanujan_derive(p), frame());
    const int d = std::min(lhs.order(), rhs.order());
    CHECK(lhs.truncated(d) == rhs.truncated(d));
  }
}

TEST_CASE("labels") {
  CHECK(label_degree(FjrwLabel::one) == 0);
  CHECK(label_degree(FjrwLabel::b1) == 1);
  CHECK(label_degree(FjrwLabel::b2) == 1);
  CHECK(label_degree(FjrwLabel::phi) == 2);
  CHECK(label_is_odd(FjrwLabel::b1));
  CHECK_FALSE(label_is_odd(FjrwLabel::phi));
  CHECK(std::string(gw_label_name(FjrwLabel::phi)) == "omega");
}

TEST_CASE("FJRW correlation functions") {
  const std::vector<FjrwInsertion> one = {phi(0)};
  CHECK(fjrw_correlation(one, frame()).truncated(12) == fjrw_genus1_series(12));
  const std::vector<FjrwInsertion> g2 = {phi(2)};
  const PowerSeries f2 = fjrw_correlation(g2, frame());
  CHECK(f2[0] == 0);
  CHECK(f2[1] == rat(1, 1080));
  const std::vector<FjrwInsertion> odd_pair = {{FjrwLabel::b1, 0}, {FjrwLabel::b1, 0}};
  CHECK(fjrw_correlation(odd_pair, frame()).is_zero());
  const std::vector<FjrwInsertion> unit = {{FjrwLabel::one, 0}, phi(0)};
  CHECK_THROWS_AS(fjrw_correlation(unit, frame()), Unsupported);
  const std::vector<FjrwInsertion> pair = {phi(0), phi(0)};
  const PowerSeries two = fjrw_correlation(pair, frame());
  const PowerSeries d1 = derive(fjrw_genus1_series(frame().order()), DeriveMode::d_ds);
  const int d = std::min(two.order(), d1.order());
  CHECK(two.truncated(d) == d1.truncated(d));
}

TEST_CASE("one-point formula in the frame") {
  CHECK(fjrw_onepoint_all_genus(1, frame()).truncated(12) == fjrw_genus1_series(12));
  const CayleyFrame& f = frame();
  const PowerSeries x = f.e2 * rat(-1, 24), y = f.e4 * rat(1, 24);
  const PowerSeries expected = x * x * rat(1, 2) + y * rat(1, 120);
  const PowerSeries g2 = fjrw_onepoint_all_genus(2, f);
  const int d = std::min(expected.order(), g2.order());
  CHECK(g2.truncated(d) == expected.truncated(d));
  CHECK(g2[0] == 0);
  for (int g = 1; g <= 6; ++g) {
    CAPTURE(g);
    const int legs[] = {2 * g - 2};
    const PowerSeries route = cayley_transform(stationary_invariant(legs), f);
    const PowerSeries direct = fjrw_onepoint_all_genus(g, f);
    const int o = std::min(route.order(), direct.order());
    CHECK(route.truncated(o) == direct.truncated(o));
  }
}

TEST_CASE("invariant extraction") {
  const auto inv = extract_fjrw_invariants(fjrw_genus1_series(12), 1);
  REQUIRE(inv.size() >= 9);
  CHECK(inv[0] == std::pair<int, Rational>{1, 0});
  CHECK(inv[1] == std::pair<int, Rational>{2, 0});
  CHECK(inv[2] == std::pair<int, Rational>{3, rat(1, 108)});
  CHECK(inv[3].second == 0);
  CHECK(inv[4].second == 0);
  CHECK(inv[5] == std::pair<int, Rational>{6, rat(1, 243)});
  CHECK(inv[8] == std::pair<int, Rational>{9, rat(8, 2187)});
  CHECK(inv[11] == std::pair<int, Rational>{12, rat(104, 6561)});
}

TEST_CASE("genus-zero primary invariants") {
  using L = FjrwLabel;
  CHECK(genus_zero_primary(std::vector<L>{L::one, L::one, L::phi}) == 1);
  CHECK(genus_zero_primary(std::vector<L>{L::one, L::b1, L::b2}) == 1);
  CHECK(genus_zero_primary(std::vector<L>{L::one, L::b2, L::b1}) == -1);
  CHECK(genus_zero_primary(std::vector<L>{L::phi, L::phi, L::phi, L::phi}) == 0);
  CHECK(genus_zero_primary(std::vector<L>{L::one, L::b1, L::b2, L::phi, L::phi}) == 0);
  CHECK(genus_zero_data().size() >= 3);
}
