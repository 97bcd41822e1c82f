#pragma once

#include "lgcy/power_series.hpp"
#include "lgcy/qm_polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace lgcy {

/// The series is not the q-expansion of an element of the weight-w space.
class NotQuasiModular : public std::runtime_error {
 public:
  NotQuasiModular(const std::string& what, int first_failing_coefficient)
      : std::runtime_error(what), first_failing_coefficient_(first_failing_coefficient) {}
  int first_failing_coefficient() const { return first_failing_coefficient_; }

 private:
  int first_failing_coefficient_;
};

/// Not enough coefficients to determine and verify a fit.
class InsufficientOrder : public std::runtime_error {
 public:
  InsufficientOrder(const std::string& what, int minimal_order)
      : std::runtime_error(what), minimal_order_(minimal_order) {}
  int minimal_order() const { return minimal_order_; }

 private:
  int minimal_order_;
};

/// sigma_k(n) = sum of d^k over divisors d of n.
Integer divisor_sigma(unsigned k, unsigned long n);

/// E_k(q) = 1 - (2k / B_k) sum_{n>=1} sigma_{k-1}(n) q^n, k even >= 2.
PowerSeries eisenstein(int k, int order);

/// (q)_inf = prod_{n>=1} (1 - q^n) truncated at q^order.
PowerSeries euler_function(int order);

/// Substitute the Eisenstein q-expansions for E2, E4, E6.
PowerSeries qm_eval(const QMPolynomial& p, int order);

/// Ramanujan derivation: E2' = (E2^2 - E4)/12, E4' = (E2 E4 - E6)/3, E6' = (E2 E6 - E4^2)/2.
QMPolynomial ramanujan_derive(const QMPolynomial& p);

/// Monomials E2^a E4^b E6^c with 2a + 4b + 6c = weight, in a fixed order.
std::vector<QMMonomial> weight_basis(int weight);

inline constexpr int kDefaultVerificationMargin = 10;

/// The unique weight-w element of Q[E2,E4,E6] whose q-expansion matches f on
/// every known coefficient. The linear system is solved on the first
/// order+1-margin coefficients and checked on all of them.
QMPolynomial quasimodularize(const PowerSeries& f, int weight, int margin = kDefaultVerificationMargin);

/// Smallest truncation order accepted by quasimodularize at this weight and margin.
int minimal_quasimodularize_order(int weight, int margin = kDefaultVerificationMargin);

/// E_k expressed through E4 and E6 (k >= 4 even). Cached per k.
QMPolynomial reduce_e2k(int k);

/// E_k as a QMPolynomial for any even k >= 2 (E2 itself for k = 2).
QMPolynomial eisenstein_generator(int k);

}  // namespace lgcy
