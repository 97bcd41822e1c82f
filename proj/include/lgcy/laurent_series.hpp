#pragma once

#include "lgcy/power_series.hpp"
#include "lgcy/qm_polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lgcy {

namespace detail {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const QMPolynomial& c) { return c.is_zero(); }

inline Rational unit_inverse(const Rational& c) {
  if (c == 0) throw SeriesDomainError("leading coefficient is not invertible");
  return 1 / c;
}

inline QMPolynomial unit_inverse(const QMPolynomial& c) {
  if (!c.is_constant() || c.is_zero())
    throw SeriesDomainError("leading coefficient is not an invertible constant");
  return QMPolynomial(1 / c.constant_term());
}

}  // namespace detail

/// Truncated Laurent series sum_{n=v}^{D} c_n var^n. The coefficient type is
/// Rational or QMPolynomial. Exponents above D are unknown. After every
/// operation the stored leading coefficient is nonzero unless the series is zero.
template <class C>
class LaurentSeries {
 public:
  LaurentSeries(Variable var, int valuation, int order, std::vector<C> coefficients)
      : var_(var), valuation_(valuation), order_(order), coeffs_(std::move(coefficients)) {
    if (static_cast<int>(coeffs_.size()) > order_ - valuation_ + 1)
      coeffs_.resize(static_cast<std::size_t>(std::max(0, order_ - valuation_ + 1)));
    normalize();
  }

  static LaurentSeries zero(Variable var, int order) { return LaurentSeries(var, order + 1, order, {}); }
  static LaurentSeries monomial(Variable var, int exponent, C c, int order) {
    return LaurentSeries(var, exponent, order, {std::move(c)});
  }
  static LaurentSeries from_power_series(const PowerSeries& p) {
    std::vector<C> c(p.coefficients().begin(), p.coefficients().end());
    return LaurentSeries(p.variable(), 0, p.order(), std::move(c));
  }

  Variable variable() const { return var_; }
  /// Lowest exponent with nonzero coefficient; order()+1 for the zero series.
  int valuation() const { return valuation_; }
  /// Highest exponent whose coefficient is known.
  int order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }

  C coefficient(int n) const {
    if (n > order_) throw std::out_of_range("Laurent coefficient beyond truncation order");
    if (n < valuation_ || n - valuation_ >= static_cast<int>(coeffs_.size())) return C{};
    return coeffs_[static_cast<std::size_t>(n - valuation_)];
  }

  LaurentSeries truncated(int order) const {
    if (order > order_) throw std::out_of_range("cannot extend truncation order");
    return LaurentSeries(var_, valuation_, order, coeffs_);
  }

  /// Multiply by var^k.
  LaurentSeries shifted(int k) const { return LaurentSeries(var_, valuation_ + k, order_ + k, coeffs_); }

  /// f(c * var).
  LaurentSeries scaled(const Rational& c) const {
    std::vector<C> out = coeffs_;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const int n = valuation_ + static_cast<int>(i);
      Rational f = lgcy::pow(c, static_cast<unsigned long>(std::abs(n)));
      if (n < 0) f = 1 / f;
      out[i] *= f;
    }
    return LaurentSeries(var_, valuation_, order_, std::move(out));
  }

  /// Apply a linear map to every coefficient.
  template <class F>
  auto map_coefficients(F&& f) const -> LaurentSeries<std::invoke_result_t<F, const C&>> {
    using D = std::invoke_result_t<F, const C&>;
    std::vector<D> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return LaurentSeries<D>(var_, valuation_, order_, std::move(out));
  }

  LaurentSeries operator+(const LaurentSeries& o) const { return combine(o, false); }
  LaurentSeries operator-(const LaurentSeries& o) const { return combine(o, true); }
  LaurentSeries operator-() const {
    std::vector<C> out = coeffs_;
    for (auto& c : out) c = -c;
    return LaurentSeries(var_, valuation_, order_, std::move(out));
  }
  LaurentSeries operator*(const Rational& s) const {
    std::vector<C> out = coeffs_;
    for (auto& c : out) c *= s;
    return LaurentSeries(var_, valuation_, order_, std::move(out));
  }
  LaurentSeries operator*(const C& s) const requires(!std::is_same_v<C, Rational>) {
    std::vector<C> out = coeffs_;
    for (auto& c : out) c = c * s;
    return LaurentSeries(var_, valuation_, order_, std::move(out));
  }

  LaurentSeries operator*(const LaurentSeries& o) const {
    check(o);
    const int order = std::min(order_ + o.valuation_, o.order_ + valuation_);
    const int val = valuation_ + o.valuation_;
    if (is_zero() || o.is_zero() || val > order) return zero(var_, order);
    std::vector<C> out(static_cast<std::size_t>(order - val + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; j < o.coeffs_.size() && i + j < out.size(); ++j) {
        if (detail::coeff_is_zero(o.coeffs_[j])) continue;
        out[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    return LaurentSeries(var_, val, order, std::move(out));
  }

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

  /// d/dvar.
  LaurentSeries derivative() const {
    std::vector<C> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      C c = coeffs_[i];
      c *= Rational(valuation_ + static_cast<int>(i));
      out.push_back(std::move(c));
    }
    return LaurentSeries(var_, valuation_ - 1, order_ - 1, std::move(out));
  }

 private:
  void check(const LaurentSeries& o) const {
    if (var_ != o.var_) throw VariableMismatch("Laurent series in different variables");
  }

  LaurentSeries combine(const LaurentSeries& o, bool subtract) const {
    check(o);
    const int order = std::min(order_, o.order_);
    const int val = std::min(valuation_, o.valuation_);
    if (val > order) return zero(var_, order);
    std::vector<C> out(static_cast<std::size_t>(order - val + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const int n = valuation_ + static_cast<int>(i);
      if (n > order) break;
      out[static_cast<std::size_t>(n - val)] += coeffs_[i];
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      const int n = o.valuation_ + static_cast<int>(i);
      if (n > order) break;
      if (subtract) out[static_cast<std::size_t>(n - val)] -= o.coeffs_[i];
      else out[static_cast<std::size_t>(n - val)] += o.coeffs_[i];
    }
    return LaurentSeries(var_, val, order, std::move(out));
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && detail::coeff_is_zero(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      valuation_ = order_ + 1;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      valuation_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  Variable var_;
  int valuation_;
  int order_;
  std::vector<C> coeffs_;
};

/// 1/a. The result has valuation -valuation(a) and the same relative precision.
template <class C>
LaurentSeries<C> reciprocal(const LaurentSeries<C>& a) {
  if (a.is_zero()) throw SeriesDomainError("reciprocal of the zero Laurent series");
  const int v = a.valuation();
  const int precision = a.order() - v;
  const C inv0 = detail::unit_inverse(a.coefficient(v));
  std::vector<C> r(static_cast<std::size_t>(precision + 1));
  r[0] = inv0;
  for (int k = 1; k <= precision; ++k) {
    C acc{};
    for (int i = 1; i <= k; ++i) {
      const C ai = a.coefficient(v + i);
      if (detail::coeff_is_zero(ai)) continue;
      acc += ai * r[static_cast<std::size_t>(k - i)];
    }
    r[static_cast<std::size_t>(k)] = -(acc * inv0);
  }
  return LaurentSeries<C>(a.variable(), -v, -v + precision, std::move(r));
}

/// exp(a) for a series with valuation >= 1.
template <class C>
LaurentSeries<C> exp(const LaurentSeries<C>& a) {
  if (!a.is_zero() && a.valuation() < 1) throw SeriesDomainError("exp needs a series with valuation >= 1");
  const int d = a.order();
  if (d < 0) throw std::out_of_range("exp of a series without known nonnegative coefficients");
  std::vector<C> r(static_cast<std::size_t>(d + 1));
  r[0] = C(Rational(1));
  for (int n = 1; n <= d; ++n) {
    C acc{};
    for (int k = 1; k <= n; ++k) {
      const C ak = a.coefficient(k);
      if (detail::coeff_is_zero(ak)) continue;
      C term = ak * r[static_cast<std::size_t>(n - k)];
      term *= Rational(k);
      acc += term;
    }
    acc *= Rational(1, n);
    r[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return LaurentSeries<C>(a.variable(), 0, d, std::move(r));
}

using ZLaurent = LaurentSeries<QMPolynomial>;

}  // namespace lgcy
