#include "lgcy/mirror_hypergeometric.hpp"

#include "lgcy/modular_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace lgcy {

namespace {

PowerSeries relabel(const PowerSeries& p, Variable var) {
  return PowerSeries(var, std::vector<Rational>(p.coefficients().begin(), p.coefficients().end()));
}

std::optional<int> first_difference(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int i = 0; i <= order; ++i)
    if (a[i] != b[i]) return i;
  return std::nullopt;
}

}  // namespace

PowerSeries hyp2f1(const HypergeometricParams& p, int order, Variable var) {
  if (order < 0) throw std::invalid_argument("negative order");
  PowerSeries out(var, order);
  Rational term = 1;
  out[0] = 1;
  for (int l = 1; l <= order; ++l) {
    const Rational c = p.c + (l - 1);
    if (c == 0) throw std::domain_error("2F1 lower parameter hits a nonpositive integer");
    term *= (p.a + (l - 1)) * (p.b + (l - 1)) / (c * l);
    out[l] = term;
  }
  return out;
}

PowerSeries borwein_a(int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  PowerSeries out(Variable::q, order);
  // m^2 + mn + n^2 >= 3/4 max(|m|,|n|)^2
  const int bound = static_cast<int>(std::sqrt(4.0 * order / 3.0)) + 1;
  for (int m = -bound; m <= bound; ++m)
    for (int n = -bound; n <= bound; ++n) {
      const int e = m * m + m * n + n * n;
      if (e <= order) out[e] += 1;
    }
  return out;
}

PowerSeries borwein_c_cubed(int order) {
  if (order < 1) throw std::invalid_argument("borwein_c_cubed needs order >= 1");
  const PowerSeries e1 = euler_function(order);
  const PowerSeries e3 = substitute_power(e1, 3);
  const PowerSeries body = pow(e3, 9) * reciprocal(pow(e1, 3));
  PowerSeries out(Variable::q, order);
  for (int n = 1; n <= order; ++n) out[n] = 27 * body[n - 1];
  return out;
}

PowerSeries alpha(int order) {
  return borwein_c_cubed(order) * reciprocal(pow(borwein_a(order), 3));
}

Report appendix_identity_checks(int order) {
  if (order < 1) throw std::invalid_argument("appendix_identity_checks needs order >= 1");
  Report report("mirror");
  const PowerSeries a = borwein_a(order);
  const PowerSeries c3 = borwein_c_cubed(order);
  const PowerSeries al = alpha(order);
  const PowerSeries e2 = eisenstein(2, order);
  const PowerSeries e2_3 = substitute_power(e2, 3);
  const PowerSeries a2 = a * a;
  const PowerSeries one = PowerSeries::constant(Variable::q, 1, order);
  const PowerSeries dlog_a = theta_log_derivative(a);
  auto add = [&](const std::string& name, const std::string& anchor, const PowerSeries& lhs, const PowerSeries& rhs) {
    const auto fail = first_difference(lhs, rhs);
    report.add(name, anchor, !fail, "through q^" + std::to_string(order), fail);
  };

  add("A^2 = (3 E2(q^3) - E2(q)) / 2", "A2 lattice theta squared", a2, (e2_3 * Rational(3) - e2) * rat(1, 2));
  add("theta_q alpha = alpha (1 - alpha) A^2", "hauptmodul derivative", derive(al, DeriveMode::theta_q),
      al * (one - al) * a2);
  add("E2 = 12 theta_q log A - (4 alpha - 1) A^2", "E2 in the alpha frame", e2,
      dlog_a * Rational(12) - (al * Rational(4) - one) * a2);
  const PowerSeries e = (e2_3 * Rational(3) + e2) * rat(1, 4);
  add("E = 6 theta_q log A - (2 C^3 - A^3) / A", "E = (3 E2(q^3) + E2(q)) / 4", e,
      dlog_a * Rational(6) - (c3 * Rational(2) - pow(a, 3)) * reciprocal(a));
  add("-E2(q^3)/8 = theta_q(-log(A)/2 - log(alpha^3 (1 - alpha))/24)", "genus-one potential in the alpha frame",
      e2_3 * rat(-1, 8), dlog_a * rat(-1, 2) - theta_log_derivative(pow(al, 3) * (one - al)) * rat(1, 24));

  const PowerSeries f = hyp2f1({rat(1, 3), rat(2, 3), 1}, order, Variable::q);
  add("A = 2F1(1/3, 2/3; 1; alpha)", "hypergeometric form of A", a, compose(f, al));
  return report;
}

IFunction i_function_gw(int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  PowerSeries i0(Variable::x, order);
  PowerSeries i1(Variable::x, order);
  for (int d = 0; d <= order; ++d) {
    const Rational c = Rational(factorial(static_cast<unsigned long>(3 * d))) /
                       Rational(pow(Integer(factorial(static_cast<unsigned long>(d))), 3));
    Rational h = 0;
    for (int k = d + 1; k <= 3 * d; ++k) h += Rational(1, k);
    i0[d] = c;
    i1[d] = c * 3 * h;
  }
  return {i0, i1};
}

IFunction i_function_fjrw(int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  PowerSeries i0(Variable::t, order);
  PowerSeries i1(Variable::t, order);
  for (int l = 0; 1 + 3 * l <= order; ++l)
    i0[1 + 3 * l] = pow(pochhammer(rat(1, 3), static_cast<unsigned long>(l)), 3) /
                    pochhammer(1, static_cast<unsigned long>(3 * l));
  for (int l = 0; 2 + 3 * l <= order; ++l)
    i1[2 + 3 * l] = pow(pochhammer(rat(2, 3), static_cast<unsigned long>(l)), 3) /
                    pochhammer(2, static_cast<unsigned long>(3 * l));
  return {i0, i1};
}

MirrorMapOutcome mirror_relation(const PowerSeries& i0, const PowerSeries& i1, int order) {
  const PowerSeries ratio = (i1 * reciprocal(i0)).truncated(order);
  if (ratio[0] != 0) throw SeriesDomainError("mirror map exponent has a constant term");
  PowerSeries q_of_x(Variable::x, order);
  const PowerSeries e = exp(ratio);
  for (int n = 1; n <= order; ++n) q_of_x[n] = e[n - 1];
  MirrorMapOutcome out{relabel(reversion(q_of_x), Variable::q), false, std::nullopt, {}};
  const PowerSeries target = alpha(order);
  const PowerSeries lhs = out.x_of_q * Rational(27);
  if (lhs == target) {
    out.exact = true;
    out.relation = "27 x(q) = alpha(q)";
    return out;
  }
  if (lhs[1] != 0) {
    const Rational lambda = target[1] / lhs[1];
    bool uniform = true;
    Rational power = 1;
    for (int n = 1; n <= order && uniform; ++n) {
      power *= lambda;
      uniform = target[n] == lhs[n] * power;
    }
    if (uniform) {
      out.rescaling = lambda;
      out.relation = "27 x(lambda q) = alpha(q) with lambda = " + to_string(lambda);
      return out;
    }
  }
  const auto fail = first_difference(lhs, target);
  out.relation = "no relation of the form 27 x(lambda q) = alpha(q); first mismatch at q^" +
                 std::to_string(fail.value_or(-1));
  return out;
}

Report mirror_map_check(int order) {
  if (order < 1) throw std::invalid_argument("mirror_map_check needs order >= 1");
  Report report("mirror");
  const IFunction gw = i_function_gw(order);
  const MirrorMapOutcome m = mirror_relation(gw.i0, gw.i1, order);
  report.add("mirror map x(q)", "q = x exp(I1/I0) inverted", m.exact, m.relation);

  const PowerSeries f = hyp2f1({rat(1, 3), rat(2, 3), 1}, order);
  PowerSeries scaled(Variable::x, order);
  for (int n = 0; n <= order; ++n) scaled[n] = f[n] * pow(Rational(27), static_cast<unsigned long>(n));
  const auto fail_gw = first_difference(gw.i0, scaled);
  report.add("I0 = 2F1(1/3, 2/3; 1; 27x)", "GW I-function", !fail_gw, {}, fail_gw);

  const IFunction fj = i_function_fjrw(order);
  const int inner = (order - 1) / 3;
  const PowerSeries g = hyp2f1({rat(1, 3), rat(1, 3), rat(2, 3)}, std::max(inner, 0), Variable::t);
  PowerSeries expected(Variable::t, order);
  for (int l = 0; 1 + 3 * l <= order; ++l)
    expected[1 + 3 * l] = g[l] / pow(Rational(27), static_cast<unsigned long>(l));
  const auto fail_fj = first_difference(fj.i0, expected);
  report.add("I0 = t 2F1(1/3, 1/3; 2/3; t^3/27)", "FJRW I-function", !fail_fj, {}, fail_fj);
  return report;
}

}  // namespace lgcy
