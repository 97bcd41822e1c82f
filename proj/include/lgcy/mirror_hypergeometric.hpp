#pragma once

#include "lgcy/power_series.hpp"
#include "lgcy/report.hpp"

#include <optional>
#include <string>
#include <utility>

namespace lgcy {

struct HypergeometricParams {
  Rational a;
  Rational b;
  Rational c;
};

/// 2F1(a, b; c; var) = sum (a)_l (b)_l / ((c)_l l!) var^l. Throws std::domain_error
/// when (c)_l vanishes inside the truncation.
PowerSeries hyp2f1(const HypergeometricParams& params, int order, Variable var = Variable::x);

/// A(q) = sum_{m,n in Z} q^{m^2 + mn + n^2}.
PowerSeries borwein_a(int order);
/// C^3(q) = 27 q (q^3; q^3)_inf^9 / (q; q)_inf^3.
PowerSeries borwein_c_cubed(int order);
/// alpha = C^3 / A^3.
PowerSeries alpha(int order);

/// The five q-series identities relating E2, A, C and alpha, plus 2F1(1/3, 2/3; 1; alpha) = A.
Report appendix_identity_checks(int order);

struct IFunction {
  PowerSeries i0;
  /// GW: the coefficient series of H without the I0 log(x) part. FJRW: the second component.
  PowerSeries i1;
};

/// I0 = sum x^d (3d)!/(d!)^3, I1~ = sum x^d (3d)!/(d!)^3 * 3 sum_{k=d+1}^{3d} 1/k.
IFunction i_function_gw(int order);
/// I0 = sum ((1/3)_l)^3 t^{1+3l} / (1)_{3l}, I1 = sum ((2/3)_l)^3 t^{2+3l} / (2)_{3l}.
IFunction i_function_fjrw(int order);

struct MirrorMapOutcome {
  /// x as a series in q from inverting q = x exp(I1~/I0).
  PowerSeries x_of_q;
  bool exact = false;
  /// Set when 27 x(lambda q) = alpha(q) holds for some lambda != 1.
  std::optional<Rational> rescaling;
  std::string relation;
};

/// Inverts the mirror map built from (i0, i1) and compares 27 x(q) with alpha(q).
MirrorMapOutcome mirror_relation(const PowerSeries& i0, const PowerSeries& i1, int order);

Report mirror_map_check(int order);

}  // namespace lgcy
