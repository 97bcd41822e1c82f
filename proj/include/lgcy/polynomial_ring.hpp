#pragma once

#include "lgcy/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace lgcy {

/// Ring variable family^sector_index, e.g. t^0_3 or s^2_1.
struct Var {
  char family = 't';
  int sector = 0;
  int index = 0;
  friend auto operator<=>(const Var&, const Var&) = default;
  std::string to_string() const;
};

/// Exponents of the variables that occur; zero exponents are never stored.
using Monomial = std::map<Var, int>;

/// Polynomial with rational coefficients in finitely many Var.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: scalar embedding
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  static Poly variable(Var v);
  static Poly monomial(Monomial m, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximal total degree; -1 for zero.
  int degree() const;
  Poly truncated_degree(int max_degree) const;
  Poly derivative(const Var& v) const;
  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  Poly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// First-order differential operator  f + sum_v a_v d/dv  with polynomial f, a_v.
class DiffOperator {
 public:
  DiffOperator() = default;
  static DiffOperator multiplication(Poly f);

  const Poly& multiplier() const { return multiplier_; }
  const std::map<Var, Poly>& field() const { return field_; }

  void add_multiplier(const Poly& f) { multiplier_ += f; }
  void add_derivation(const Var& v, const Poly& coefficient);

  Poly apply(const Poly& p) const;
  /// [A, B] = AB - BA, again first order.
  DiffOperator commutator(const DiffOperator& other) const;
  /// Rename variables; used to compare operators of isomorphic theories.
  template <class F>
  DiffOperator relabeled(F&& rename) const;

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator& operator*=(const Rational& c);
  friend DiffOperator operator*(DiffOperator a, const Rational& c) { return a *= c; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

  std::string to_string() const;

 private:
  void prune();

  Poly multiplier_;
  std::map<Var, Poly> field_;
};

/// Rename every variable of p.
template <class F>
Poly relabel(const Poly& p, F&& rename) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial r;
    for (const auto& [v, e] : m) r[rename(v)] += e;
    out.add_term(r, c);
  }
  return out;
}

template <class F>
DiffOperator DiffOperator::relabeled(F&& rename) const {
  DiffOperator out;
  out.multiplier_ = relabel(multiplier_, rename);
  for (const auto& [v, a] : field_) out.add_derivation(rename(v), relabel(a, rename));
  return out;
}

/// All monomials of total degree <= max_degree in the given variables (including 1).
std::vector<Monomial> monomials_up_to(const std::vector<Var>& vars, int max_degree);

}  // namespace lgcy
