#pragma once

#include "lgcy/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgcy {

/// Formal variable of a univariate series. Mixing variables is a runtime error.
enum class Variable { q, s, t, x, z };

/// q -> theta_q = q d/dq, everything else -> plain d/dvar.
enum class DeriveMode { theta_q, d_ds };

const char* variable_name(Variable v);

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for a constant term that makes reciprocal/log/exp/compose undefined.
class SeriesDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated power series sum_{n=0}^{D} a_n var^n with exact rational coefficients.
/// Coefficients beyond D are unknown; binary operations keep the smaller D.
class PowerSeries {
 public:
  PowerSeries(Variable var, int order);
  PowerSeries(Variable var, std::vector<Rational> coefficients);

  static PowerSeries constant(Variable var, const Rational& c, int order);
  static PowerSeries monomial(Variable var, int exponent, const Rational& c, int order);
  /// Variable itself, e.g. q + O(q^{order+1}).
  static PowerSeries identity(Variable var, int order);

  Variable variable() const { return var_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Coefficient of var^n; throws std::out_of_range beyond the truncation order.
  const Rational& operator[](int n) const;
  Rational& operator[](int n);

  PowerSeries truncated(int order) const;
  bool is_zero() const;
  /// Smallest n with a_n != 0, or order()+1 for the zero series.
  int valuation() const;

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const PowerSeries& other);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
  PowerSeries operator-() const;

  /// Exact equality: same variable, same order, same coefficients.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

  std::string to_string() const;

 private:
  void check_same_variable(const PowerSeries& other) const;

  Variable var_;
  std::vector<Rational> coeffs_;
};

PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries pow(const PowerSeries& a, unsigned exponent);

/// 1/a; requires a[0] != 0.
PowerSeries reciprocal(const PowerSeries& a);
/// exp(a); requires a[0] == 0.
PowerSeries exp(const PowerSeries& a);
/// log(a); requires a[0] == 1.
PowerSeries log(const PowerSeries& a);
/// f(g(var)); requires g[0] == 0. Result order is min(order(f), order(g)) when g[1] != 0.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);
/// Compositional inverse: returns h with f(h(var)) = var; requires f[0] == 0, f[1] != 0.
PowerSeries reversion(const PowerSeries& f);

/// theta_q keeps the order; d_ds lowers it by one. theta_q only applies to q-series.
PowerSeries derive(const PowerSeries& a, DeriveMode mode);
/// mode matching the variable: theta_q for q, d_ds otherwise.
DeriveMode natural_mode(Variable var);

/// a(var^k) to the same order.
PowerSeries substitute_power(const PowerSeries& a, int k);
/// theta_q log(f) where f = c q^v (1 + ...), c != 0: v + theta_q(u)/u.
PowerSeries theta_log_derivative(const PowerSeries& f);

}  // namespace lgcy
