#pragma once

#include "lgcy/power_series.hpp"
#include "lgcy/qm_polynomial.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgcy {

/// Images of E2, E4, E6 under the holomorphic Cayley transformation, as series in s.
/// The base point tau* and the constant c are transcendental and only recorded.
struct CayleyFrame {
  PowerSeries e2;
  PowerSeries e4;
  PowerSeries e6;
  std::string tau_star = "tau* = exp(2 pi i / 3), the Z_3 elliptic point";
  std::string c = "c = normalization constant of the Cayley map (never evaluated)";

  /// Highest s-power known for every generator image.
  int order() const { return e6.order(); }
};

/// e2 = -24 * fjrw genus-one series (Chazy with f''(0) = -2/9),
/// e4 = e2^2 - 12 e2', e6 = e2 e4 - 3 e4'. Orders D, D-1, D-2.
CayleyFrame cayley_frame(int order);

/// Generator substitution p(E2, E4, E6) -> p(C E2, C E4, C E6) in s.
PowerSeries cayley_transform(const QMPolynomial& p, const CayleyFrame& frame);

enum class FjrwLabel { one, phi, b1, b2 };

const char* label_name(FjrwLabel label);
/// 0 for 1, 1 for b1 and b2, 2 for phi.
int label_degree(FjrwLabel label);
bool label_is_odd(FjrwLabel label);

/// Label under the isomorphism with the elliptic curve state space: 1, omega, e1, e2.
const char* gw_label_name(FjrwLabel label);

struct FjrwInsertion {
  FjrwLabel label = FjrwLabel::phi;
  int psi = 0;
  friend bool operator==(const FjrwInsertion&, const FjrwInsertion&) = default;
};

class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Genus fixed by the dimension constraint: sum psi = 2g - 2 for stationary insertions.
int fjrw_genus(std::span<const FjrwInsertion> insertions);

/// Connected FJRW correlation function <<phi psi^l1, ..., phi psi^lN>>(s), the Cayley
/// image of the connected stationary GW function. Insertions with odd labels give
/// zero when they are forced to by the Z_2 grading and throw Unsupported otherwise.
PowerSeries fjrw_correlation(std::span<const FjrwInsertion> insertions, const CayleyFrame& frame);

/// <<phi psi^{2g-2}>>_{g,1}(s) from the b_{m,n} formula evaluated in the frame.
PowerSeries fjrw_onepoint_all_genus(int genus, const CayleyFrame& frame);

/// (base_n + m, m! [s^m] f) for every known m.
std::vector<std::pair<int, Rational>> extract_fjrw_invariants(const PowerSeries& f, int base_n);

struct GenusZeroValue {
  std::vector<FjrwLabel> insertions;
  Rational value;
};

/// Three-point genus-zero primary values of the unit with the other basis elements.
std::vector<GenusZeroValue> genus_zero_data();

/// Any primary genus-zero FJRW invariant. Three-point values come from the pairing
/// and the Z_2 grading; every invariant with four or more insertions vanishes.
Rational genus_zero_primary(std::span<const FjrwLabel> insertions);

}  // namespace lgcy
