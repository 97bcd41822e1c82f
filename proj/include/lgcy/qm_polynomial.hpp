#pragma once

#include "lgcy/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace lgcy {

/// E2^e2 E4^e4 E6^e6.
struct QMMonomial {
  int e2 = 0;
  int e4 = 0;
  int e6 = 0;

  int weight() const { return 2 * e2 + 4 * e4 + 6 * e6; }
  friend auto operator<=>(const QMMonomial&, const QMMonomial&) = default;
};

/// Element of Q[E2, E4, E6], the ring of quasi-modular forms with rational
/// coefficients. Zero coefficients are never stored.
class QMPolynomial {
 public:
  using TermMap = std::map<QMMonomial, Rational>;

  QMPolynomial() = default;
  QMPolynomial(const Rational& constant);  // NOLINT: implicit scalar embedding
  QMPolynomial(long constant) : QMPolynomial(Rational(constant)) {}  // NOLINT

  static QMPolynomial monomial(QMMonomial m, const Rational& c = 1);
  static QMPolynomial E2() { return monomial({1, 0, 0}); }
  static QMPolynomial E4() { return monomial({0, 1, 0}); }
  static QMPolynomial E6() { return monomial({0, 0, 1}); }
  /// C2 = -E2/24.
  static QMPolynomial C2() { return monomial({1, 0, 0}, rat(-1, 24)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const { return coefficient({}); }
  Rational coefficient(QMMonomial m) const;

  /// Common weight of all monomials; nullopt for the zero polynomial or mixed weights.
  std::optional<int> weight() const;
  bool is_homogeneous() const { return is_zero() || weight().has_value(); }

  void add_term(QMMonomial m, const Rational& c);

  QMPolynomial& operator+=(const QMPolynomial& other);
  QMPolynomial& operator-=(const QMPolynomial& other);
  QMPolynomial& operator*=(const Rational& c);
  QMPolynomial& operator*=(const QMPolynomial& other) { return *this = *this * other; }

  friend QMPolynomial operator+(QMPolynomial a, const QMPolynomial& b) { return a += b; }
  friend QMPolynomial operator-(QMPolynomial a, const QMPolynomial& b) { return a -= b; }
  friend QMPolynomial operator*(const QMPolynomial& a, const QMPolynomial& b);
  friend QMPolynomial operator*(QMPolynomial a, const Rational& c) { return a *= c; }
  friend QMPolynomial operator*(const Rational& c, QMPolynomial a) { return a *= c; }
  QMPolynomial operator-() const;

  friend bool operator==(const QMPolynomial&, const QMPolynomial&) = default;

  /// Formal partial derivative with respect to the generator E2.
  QMPolynomial partial_e2() const;

  /// Human-readable form, e.g. "-1/24*E2" or "1/1152*E2^2 + 1/2880*E4".
  std::string to_string() const;

 private:
  TermMap terms_;
};

QMPolynomial pow(const QMPolynomial& p, unsigned exponent);

}  // namespace lgcy
