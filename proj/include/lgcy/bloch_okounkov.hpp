#pragma once

#include "lgcy/laurent_series.hpp"
#include "lgcy/qm_polynomial.hpp"

#include <functional>
#include <map>
#include <span>
#include <vector>

namespace lgcy {

/// Rational table indexed by (m, n) with 4m + 6n <= bound.
class WeierstrassTable {
 public:
  explicit WeierstrassTable(int bound) : bound_(bound) {}

  int bound() const { return bound_; }
  /// Zero for negative indices; throws std::out_of_range above the bound.
  Rational at(int m, int n) const;
  void set(int m, int n, Rational value);
  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

 private:
  int bound_;
  std::map<std::pair<int, int>, Rational> entries_;
};

/// a_{m,n} from the Weierstrass recursion, a_{0,0} = 1.
WeierstrassTable weierstrass_a(int bound);

/// b_{m,n} with 1/sigma~(z) = (1/z) sum b_{m,n} (E4/24)^m (-E6/108)^n z^{4m+6n};
/// read off from the Laurent reciprocal of sigma_tilde.
WeierstrassTable b_table(int bound);

/// sigma~(z) = z exp(sum_{k>=2} B_{2k}/(2k (2k)!) E_{2k} z^{2k}), known through z^{order}.
ZLaurent sigma_tilde(int order);
/// The same series from the a_{m,n} table: sum a_{m,n}/(4m+6n+1)! (E4/24)^m (-E6/108)^n z^{4m+6n+1}.
ZLaurent sigma_tilde_weierstrass(int order);

/// Theta(z) = e^{E2 z^2/24} sigma~(z), known through z^{order}. Both constructions
/// are computed and compared; a mismatch throws std::logic_error.
ZLaurent prime_form(int order);

/// 1/Theta(z), coefficients through z^{weight_bound - 1} (all weights <= weight_bound).
ZLaurent one_over_theta(int weight_bound);

/// d^m/dz^m log Theta(z) for m >= 1, coefficients of weight <= weight_bound.
ZLaurent log_theta_deriv(int m, int weight_bound);

/// Multivariate Laurent polynomial in z_1..z_N with QMPolynomial coefficients.
/// Exponents are >= -1 and the weight sum(e_i + 1) is at most weight_bound.
class MultiZPoly {
 public:
  using Exponents = std::vector<int>;

  MultiZPoly(int legs, int weight_bound) : legs_(legs), weight_bound_(weight_bound) {}

  int legs() const { return legs_; }
  int weight_bound() const { return weight_bound_; }
  const std::map<Exponents, QMPolynomial>& terms() const { return terms_; }

  /// Throws std::out_of_range if the weight exceeds the bound.
  QMPolynomial coefficient(std::span<const int> exponents) const;
  void add(Exponents exponents, const QMPolynomial& value);

  friend bool operator==(const MultiZPoly&, const MultiZPoly&) = default;

 private:
  int legs_;
  int weight_bound_;
  std::map<Exponents, QMPolynomial> terms_;
};

/// Largest N accepted by npoint.
inline constexpr int kMaxLegs = 4;

/// (q)_inf F_N(z_1..z_N) from the determinant formula, summed over permutations.
/// See npoint_from_evaluator for how the multivariate series is assembled.
MultiZPoly npoint(int legs, int weight_bound);

/// (q)_inf F_2 from the two-point closed form (dlogTheta(z1) + dlogTheta(z2)) / Theta(z1+z2).
MultiZPoly npoint_two_closed_form(int weight_bound);

/// Evaluates G(a t) = prod z_i * H(z) at z_i = a_i t as a Laurent series in t.
using RayEvaluator = std::function<ZLaurent(std::span<const Rational> a, int weight_bound)>;

/// Reconstructs H from its restrictions to rays z = a t. Each homogeneous part of
/// prod z_i * H is interpolated on a grid of positive a (so no partial sum of the
/// z_i vanishes on the ray); terms above the total degree must come out zero.
MultiZPoly npoint_from_evaluator(int legs, int weight_bound, const RayEvaluator& evaluate);

/// Disconnected stationary ancestor function (q)_inf <<prod omega psi^{l_i}>>^bullet,
/// i.e. the coefficient of prod z_i^{l_i+1} in (q)_inf F_N. Requires l_i >= -2.
QMPolynomial stationary_invariant(std::span<const int> legs);
/// Same, read from a precomputed npoint table.
QMPolynomial stationary_invariant(const MultiZPoly& table, std::span<const int> legs);

/// Disconnected values keyed by the sorted list of psi-powers.
using DisconnectedTable = std::map<std::vector<int>, QMPolynomial>;

class MissingSubtable : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Connected function from disconnected ones: disconnected(S) = sum over set
/// partitions of S of the product of connected(blocks). Every sub-multiset of
/// legs must be present in the table.
QMPolynomial connected_from_disconnected(std::span<const int> legs, const DisconnectedTable& table);

/// Builds the table of all sub-multisets of legs from stationary_invariant.
DisconnectedTable disconnected_table(std::span<const int> legs);

}  // namespace lgcy
