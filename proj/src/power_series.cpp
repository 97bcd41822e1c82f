#include "lgcy/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace lgcy {

const char* variable_name(Variable v) {
  switch (v) {
    case Variable::q: return "q";
    case Variable::s: return "s";
    case Variable::t: return "t";
    case Variable::x: return "x";
    case Variable::z: return "z";
  }
  return "?";
}

PowerSeries::PowerSeries(Variable var, int order) : var_(var) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries::PowerSeries(Variable var, std::vector<Rational> coefficients)
    : var_(var), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(Variable var, const Rational& c, int order) {
  PowerSeries r(var, order);
  r.coeffs_[0] = c;
  return r;
}

PowerSeries PowerSeries::monomial(Variable var, int exponent, const Rational& c, int order) {
  PowerSeries r(var, order);
  if (exponent < 0) throw std::invalid_argument("negative exponent in power series");
  if (exponent <= order) r.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return r;
}

PowerSeries PowerSeries::identity(Variable var, int order) { return monomial(var, 1, 1, order); }

const Rational& PowerSeries::operator[](int n) const {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

Rational& PowerSeries::operator[](int n) {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > this->order()) throw std::out_of_range("cannot extend truncation order");
  return PowerSeries(var_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int PowerSeries::valuation() const {
  for (int n = 0; n <= order(); ++n)
    if (coeffs_[static_cast<std::size_t>(n)] != 0) return n;
  return order() + 1;
}

void PowerSeries::check_same_variable(const PowerSeries& other) const {
  if (var_ != other.var_)
    throw VariableMismatch(std::string("series in ") + variable_name(var_) + " mixed with series in " +
                           variable_name(other.var_));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  check_same_variable(other);
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  check_same_variable(other);
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  a.check_same_variable(b);
  const int d = std::min(a.order(), b.order());
  PowerSeries r(a.var_, d);
  const int va = a.valuation(), vb = b.valuation();
  for (int i = va; i <= d; ++i) {
    const Rational& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = vb; i + j <= d; ++j) r.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return r;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& other) { return *this = *this * other; }

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string PowerSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int n = 0; n <= order(); ++n) {
    const Rational& c = coeffs_[static_cast<std::size_t>(n)];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Rational mag = abs(c);
    if (n == 0 || mag != 1) out << lgcy::to_string(mag);
    if (n > 0) {
      if (mag != 1) out << "*";
      out << variable_name(var_);
      if (n > 1) out << "^" << n;
    }
  }
  if (first) out << "0";
  out << " + O(" << variable_name(var_) << "^" << order() + 1 << ")";
  return out.str();
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }

PowerSeries pow(const PowerSeries& a, unsigned exponent) {
  PowerSeries result = PowerSeries::constant(a.variable(), 1, a.order());
  PowerSeries base = a;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0] == 0) throw SeriesDomainError("reciprocal of a series with zero constant term");
  const int d = a.order();
  PowerSeries r(a.variable(), d);
  const Rational inv0 = 1 / a[0];
  r[0] = inv0;
  for (int n = 1; n <= d; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i)
      if (a[i] != 0) acc += a[i] * r[n - i];
    r[n] = -acc * inv0;
  }
  return r;
}

PowerSeries exp(const PowerSeries& a) {
  if (a[0] != 0) throw SeriesDomainError("exp of a series with nonzero constant term");
  const int d = a.order();
  PowerSeries r(a.variable(), d);
  r[0] = 1;
  // n r_n = sum_{k=1}^{n} k a_k r_{n-k}
  for (int n = 1; n <= d; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k)
      if (a[k] != 0) acc += Rational(k) * a[k] * r[n - k];
    r[n] = acc / Rational(n);
  }
  return r;
}

PowerSeries log(const PowerSeries& a) {
  if (a[0] != 1) throw SeriesDomainError("log of a series with constant term != 1");
  const int d = a.order();
  PowerSeries r(a.variable(), d);
  // n a_n = sum_{k=1}^{n} k r_k a_{n-k}
  for (int n = 1; n <= d; ++n) {
    Rational acc = Rational(n) * a[n];
    for (int k = 1; k < n; ++k)
      if (r[k] != 0) acc -= Rational(k) * r[k] * a[n - k];
    r[n] = acc / Rational(n);
  }
  return r;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (f.variable() != g.variable())
    throw VariableMismatch("compose requires series in the same variable");
  if (g[0] != 0) throw SeriesDomainError("compose requires inner series with zero constant term");
  const int d = std::min(f.order(), g.order());
  const PowerSeries inner = g.truncated(d);
  // Horner from the top coefficient down
  PowerSeries r = PowerSeries::constant(f.variable(), f[d], d);
  for (int n = d - 1; n >= 0; --n) {
    r = r * inner;
    r[0] += f[n];
  }
  return r;
}

PowerSeries reversion(const PowerSeries& f) {
  if (f[0] != 0) throw SeriesDomainError("reversion requires zero constant term");
  if (f.order() < 1 || f[1] == 0) throw SeriesDomainError("reversion requires a nonzero linear term");
  const int d = f.order();
  PowerSeries h = PowerSeries::monomial(f.variable(), 1, 1 / f[1], d);
  // f(h) = var determines h_n from the linear term of f once h_1..h_{n-1} are fixed
  for (int n = 2; n <= d; ++n) {
    const PowerSeries fh = compose(f, h);
    h[n] -= fh[n] / f[1];
  }
  return h;
}

DeriveMode natural_mode(Variable var) { return var == Variable::q ? DeriveMode::theta_q : DeriveMode::d_ds; }

PowerSeries derive(const PowerSeries& a, DeriveMode mode) {
  if ((mode == DeriveMode::theta_q) != (a.variable() == Variable::q))
    throw VariableMismatch(std::string("derivative mode does not match variable ") + variable_name(a.variable()));
  if (mode == DeriveMode::theta_q) {
    PowerSeries r = a;
    for (int n = 0; n <= a.order(); ++n) r[n] *= Rational(n);
    return r;
  }
  if (a.order() == 0) throw std::out_of_range("derivative of an order-0 series has no known coefficients");
  PowerSeries r(a.variable(), a.order() - 1);
  for (int n = 0; n < a.order(); ++n) r[n] = Rational(n + 1) * a[n + 1];
  return r;
}

PowerSeries substitute_power(const PowerSeries& a, int k) {
  if (k < 1) throw std::invalid_argument("substitute_power needs k >= 1");
  PowerSeries r(a.variable(), a.order());
  for (int n = 0; n * k <= a.order(); ++n) r[n * k] = a[n];
  return r;
}

PowerSeries theta_log_derivative(const PowerSeries& f) {
  if (f.variable() != Variable::q) throw VariableMismatch("theta_log_derivative needs a q-series");
  const int v = f.valuation();
  if (v > f.order()) throw SeriesDomainError("log-derivative of the zero series");
  const int d = f.order() - v;
  std::vector<Rational> unit(f.coefficients().begin() + v, f.coefficients().end());
  const PowerSeries u(f.variable(), std::move(unit));
  PowerSeries r = derive(u, DeriveMode::theta_q) * reciprocal(u);
  r[0] += Rational(v);
  return r.truncated(d);
}

}  // namespace lgcy
