#include "lgcy/rational.hpp"

#include <mutex>
#include <vector>

namespace lgcy {

Rational rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational pochhammer(const Rational& x, unsigned long n) {
  Rational r = 1;
  for (unsigned long i = 0; i < n; ++i) r *= x + Rational(static_cast<long>(i));
  return r;
}

Rational bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  while (table.size() <= n) {
    const unsigned long m = table.size();
    Rational acc = 0;
    for (unsigned long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * table[k];
    table.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return table[n];
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  const std::string s(text);
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace lgcy
