#include "lgcy/qm_polynomial.hpp"

#include <sstream>

namespace lgcy {

QMPolynomial::QMPolynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(QMMonomial{}, constant);
}

QMPolynomial QMPolynomial::monomial(QMMonomial m, const Rational& c) {
  QMPolynomial p;
  p.add_term(m, c);
  return p;
}

bool QMPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == QMMonomial{});
}

Rational QMPolynomial::coefficient(QMMonomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> QMPolynomial::weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_)
    if (m.weight() != w) return std::nullopt;
  return w;
}

void QMPolynomial::add_term(QMMonomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QMPolynomial& QMPolynomial::operator+=(const QMPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

QMPolynomial& QMPolynomial::operator-=(const QMPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

QMPolynomial& QMPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

QMPolynomial operator*(const QMPolynomial& a, const QMPolynomial& b) {
  QMPolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.e2 + mb.e2, ma.e4 + mb.e4, ma.e6 + mb.e6}, ca * cb);
  return r;
}

QMPolynomial QMPolynomial::operator-() const {
  QMPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

QMPolynomial QMPolynomial::partial_e2() const {
  QMPolynomial r;
  for (const auto& [m, c] : terms_)
    if (m.e2 > 0) r.add_term({m.e2 - 1, m.e4, m.e6}, c * Rational(m.e2));
  return r;
}

std::string QMPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest E2 power first reads closest to the usual notation
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Rational mag = abs(c);
    const bool unit_monomial = m == QMMonomial{};
    if (unit_monomial || mag != 1) out << lgcy::to_string(mag);
    bool need_star = !unit_monomial && mag != 1;
    auto gen = [&](const char* name, int e) {
      if (e == 0) return;
      if (need_star) out << "*";
      out << name;
      if (e > 1) out << "^" << e;
      need_star = true;
    };
    gen("E2", m.e2);
    gen("E4", m.e4);
    gen("E6", m.e6);
  }
  return out.str();
}

QMPolynomial pow(const QMPolynomial& p, unsigned exponent) {
  QMPolynomial result(1);
  QMPolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace lgcy
