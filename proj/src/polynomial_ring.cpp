#include "lgcy/polynomial_ring.hpp"

#include <functional>
#include <sstream>

namespace lgcy {

std::string Var::to_string() const {
  std::ostringstream os;
  os << family << '^' << sector << '_' << index;
  return os.str();
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(Var v) { return monomial({{v, 1}}); }

Poly Poly::monomial(Monomial m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int k = 0;
    for (const auto& [v, e] : m) k += e;
    d = std::max(d, k);
  }
  return d;
}

Poly Poly::truncated_degree(int max_degree) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    int k = 0;
    for (const auto& [v, e] : m) k += e;
    if (k <= max_degree) out.terms_.emplace(m, c);
  }
  return out;
}

Poly Poly::derivative(const Var& v) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(v);
    if (it == m.end()) continue;
    Monomial r = m;
    const int e = it->second;
    if (e == 1) r.erase(v);
    else r[v] = e - 1;
    out.add_term(r, c * e);
  }
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Rational a = abs(c);
    if (m.empty() || a != 1) os << lgcy::to_string(a);
    bool sep = !m.empty() && a != 1;
    for (const auto& [v, e] : m) {
      if (sep) os << '*';
      sep = true;
      os << v.to_string();
      if (e != 1) os << "**" << e;
    }
  }
  return os.str();
}

DiffOperator DiffOperator::multiplication(Poly f) {
  DiffOperator d;
  d.multiplier_ = std::move(f);
  return d;
}

void DiffOperator::add_derivation(const Var& v, const Poly& coefficient) {
  field_[v] += coefficient;
  if (field_[v].is_zero()) field_.erase(v);
}

Poly DiffOperator::apply(const Poly& p) const {
  Poly out = multiplier_ * p;
  for (const auto& [v, a] : field_) {
    Poly d = p.derivative(v);
    if (!d.is_zero()) out += a * d;
  }
  return out;
}

DiffOperator DiffOperator::commutator(const DiffOperator& o) const {
  // [f + X, g + Y] = X(g) - Y(f) + sum_v (X(b_v) - Y(a_v)) d/dv
  auto vector_part = [](const DiffOperator& op) {
    DiffOperator x = op;
    x.multiplier_ = Poly();
    return x;
  };
  const DiffOperator x = vector_part(*this);
  const DiffOperator y = vector_part(o);
  DiffOperator out;
  out.multiplier_ = x.apply(o.multiplier_) - y.apply(multiplier_);
  for (const auto& [v, b] : o.field_) out.add_derivation(v, x.apply(b));
  for (const auto& [v, a] : field_) out.add_derivation(v, -y.apply(a));
  return out;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  multiplier_ += o.multiplier_;
  for (const auto& [v, a] : o.field_) field_[v] += a;
  prune();
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  multiplier_ -= o.multiplier_;
  for (const auto& [v, a] : o.field_) field_[v] -= a;
  prune();
  return *this;
}

DiffOperator& DiffOperator::operator*=(const Rational& c) {
  multiplier_ *= c;
  for (auto& [v, a] : field_) a *= c;
  prune();
  return *this;
}

void DiffOperator::prune() {
  std::erase_if(field_, [](const auto& kv) { return kv.second.is_zero(); });
}

std::string DiffOperator::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (!multiplier_.is_zero()) {
    os << '(' << multiplier_.to_string() << ')';
    first = false;
  }
  for (const auto& [v, a] : field_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << a.to_string() << ")*d/d" << v.to_string();
  }
  return first ? "0" : os.str();
}

std::vector<Monomial> monomials_up_to(const std::vector<Var>& vars, int max_degree) {
  std::vector<Monomial> out;
  Monomial current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == vars.size()) {
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      if (e > 0) current[vars[i]] = e;
      rec(i + 1, left - e);
    }
    current.erase(vars[i]);
  };
  rec(0, max_degree);
  return out;
}

}  // namespace lgcy
