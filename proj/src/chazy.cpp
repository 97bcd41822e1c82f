#include "lgcy/chazy.hpp"

#include <algorithm>

namespace lgcy {

namespace {

struct Derivatives {
  PowerSeries f, d1, d2, d3;
};

Derivatives derivatives(const PowerSeries& f, DeriveMode mode) {
  PowerSeries d1 = derive(f, mode);
  PowerSeries d2 = derive(d1, mode);
  PowerSeries d3 = derive(d2, mode);
  const int order = d3.order();
  return {f.truncated(order), d1.truncated(order), d2.truncated(order), d3};
}

}  // namespace

PowerSeries chazy_residual(const PowerSeries& f, DeriveMode mode) {
  const auto [g, d1, d2, d3] = derivatives(f, mode);
  return d3 * Rational(2) - g * d2 * Rational(2) + d1 * d1 * Rational(3);
}

PowerSeries bp_residual(const PowerSeries& g, DeriveMode mode) {
  const auto [h, d1, d2, d3] = derivatives(g, mode);
  return h * d2 * rat(12, 5) - d1 * d1 * rat(18, 5) + d3 * rat(1, 10);
}

PowerSeries chazy_solve_s(const ChazyInitialData& init, int order) {
  if (order < 2) throw std::invalid_argument("chazy_solve_s needs order >= 2");
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1);
  a[0] = init.f0;
  a[1] = init.f1;
  a[2] = init.f2 / 2;
  // 2 (k+1)(k+2)(k+3) a_{k+3} = [s^k] (2 f f'' - 3 f'^2); the right side only uses a_0..a_{k+2}
  for (int k = 0; k + 3 <= order; ++k) {
    Rational rhs = 0;
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      rhs += 2 * a[i] * Rational((j + 2) * (j + 1)) * a[j + 2];
      rhs -= 3 * Rational(i + 1) * a[i + 1] * Rational(j + 1) * a[j + 1];
    }
    a[k + 3] = rhs / Rational(2 * (k + 1) * (k + 2) * (k + 3));
  }
  return PowerSeries(Variable::s, std::move(a));
}

Rational theta_1_3() { return rat(1, 108); }

ChazyInitialData fjrw_initial_data(const Rational& theta13) {
  // <<phi>> = sum_m s^m/m! Theta_{1,m+1}, so [s^2] <<phi>> = Theta_{1,3}/2 and f''(0) = 2 [s^2] f.
  const Rational genus1_s2 = theta13 / 2;
  return {0, 0, Rational(2) * Rational(-24) * genus1_s2};
}

PowerSeries fjrw_genus1_series(int order, const Rational& theta13) {
  return chazy_solve_s(fjrw_initial_data(theta13), order) * rat(-1, 24);
}

}  // namespace lgcy
