#pragma once

#include "lgcy/power_series.hpp"

namespace lgcy {

/// f(0), f'(0), f''(0) of a formal solution in s.
struct ChazyInitialData {
  Rational f0;
  Rational f1;
  Rational f2;
};

/// 2 f''' - 2 f f'' + 3 (f')^2, with ' the derivative selected by mode.
PowerSeries chazy_residual(const PowerSeries& f, DeriveMode mode);

/// (12/5) g g'' - (18/5) (g')^2 + (1/10) g'''.
PowerSeries bp_residual(const PowerSeries& g, DeriveMode mode);

/// Unique formal solution in s of the Chazy equation with the given initial data.
PowerSeries chazy_solve_s(const ChazyInitialData& init, int order);

/// Genus-one FJRW invariant <phi,phi,phi>_1 used as the only input of the FJRW side.
Rational theta_1_3();

/// Initial data of f = -24 <<phi>>_{1,1}(s) derived from Theta_{1,1} = Theta_{1,2} = 0
/// and the supplied Theta_{1,3}: f''(0) = -24 Theta_{1,3}.
ChazyInitialData fjrw_initial_data(const Rational& theta13 = theta_1_3());

/// <<phi>>_{1,1}(s) = -(1/24) chazy_solve_s(fjrw_initial_data(theta13), order).
PowerSeries fjrw_genus1_series(int order, const Rational& theta13 = theta_1_3());

}  // namespace lgcy
