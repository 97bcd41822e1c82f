#include "lgcy/modular_forms.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace lgcy {

Integer divisor_sigma(unsigned k, unsigned long n) {
  Integer total = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), d, k);
    total += term;
    const unsigned long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), e, k);
      total += term;
    }
  }
  return total;
}

PowerSeries eisenstein(int k, int order) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("eisenstein needs an even weight k >= 2");
  PowerSeries e(Variable::q, order);
  e[0] = 1;
  const Rational factor = -Rational(2 * k) / bernoulli(static_cast<unsigned>(k));
  for (int n = 1; n <= order; ++n)
    e[n] = factor * Rational(divisor_sigma(static_cast<unsigned>(k - 1), static_cast<unsigned long>(n)));
  return e;
}

PowerSeries euler_function(int order) {
  PowerSeries r = PowerSeries::constant(Variable::q, 1, order);
  for (int n = 1; n <= order; ++n) {
    // multiply by (1 - q^n) in place, highest exponent first
    for (int m = order; m >= n; --m) r[m] -= r[m - n];
  }
  return r;
}

namespace {

struct GeneratorPowers {
  explicit GeneratorPowers(int order)
      : order(order), gens{eisenstein(2, order), eisenstein(4, order), eisenstein(6, order)} {
    for (int g = 0; g < 3; ++g) powers[g].push_back(PowerSeries::constant(Variable::q, 1, order));
  }

  const PowerSeries& power(int g, int e) {
    auto& list = powers[g];
    while (static_cast<int>(list.size()) <= e) list.push_back(list.back() * gens[g]);
    return list[static_cast<std::size_t>(e)];
  }

  PowerSeries monomial(QMMonomial m) { return power(0, m.e2) * power(1, m.e4) * power(2, m.e6); }

  int order;
  PowerSeries gens[3];
  std::vector<PowerSeries> powers[3];
};

}  // namespace

PowerSeries qm_eval(const QMPolynomial& p, int order) {
  GeneratorPowers g(order);
  PowerSeries r(Variable::q, order);
  for (const auto& [m, c] : p.terms()) r += g.monomial(m) * c;
  return r;
}

QMPolynomial ramanujan_derive(const QMPolynomial& p) {
  const QMPolynomial E2 = QMPolynomial::E2(), E4 = QMPolynomial::E4(), E6 = QMPolynomial::E6();
  const QMPolynomial dE2 = (E2 * E2 - E4) * rat(1, 12);
  const QMPolynomial dE4 = (E2 * E4 - E6) * rat(1, 3);
  const QMPolynomial dE6 = (E2 * E6 - E4 * E4) * rat(1, 2);
  QMPolynomial r;
  for (const auto& [m, c] : p.terms()) {
    if (m.e2 > 0)
      r += QMPolynomial::monomial({m.e2 - 1, m.e4, m.e6}, c * Rational(m.e2)) * dE2;
    if (m.e4 > 0)
      r += QMPolynomial::monomial({m.e2, m.e4 - 1, m.e6}, c * Rational(m.e4)) * dE4;
    if (m.e6 > 0)
      r += QMPolynomial::monomial({m.e2, m.e4, m.e6 - 1}, c * Rational(m.e6)) * dE6;
  }
  return r;
}

std::vector<QMMonomial> weight_basis(int weight) {
  std::vector<QMMonomial> basis;
  if (weight < 0 || weight % 2 != 0) return basis;
  for (int c = 0; 6 * c <= weight; ++c)
    for (int b = 0; 6 * c + 4 * b <= weight; ++b) {
      const int rest = weight - 6 * c - 4 * b;
      basis.push_back({rest / 2, b, c});
    }
  return basis;
}

int minimal_quasimodularize_order(int weight, int margin) {
  return static_cast<int>(weight_basis(weight).size()) + margin - 1;
}

QMPolynomial quasimodularize(const PowerSeries& f, int weight, int margin) {
  if (f.variable() != Variable::q) throw VariableMismatch("quasimodularize needs a q-series");
  const auto basis = weight_basis(weight);
  const int dim = static_cast<int>(basis.size());
  const int needed = dim + margin - 1;
  if (f.order() < needed) {
    std::ostringstream msg;
    msg << "quasimodularize at weight " << weight << " needs q-order >= " << needed << ", got " << f.order();
    throw InsufficientOrder(msg.str(), needed);
  }
  if (dim == 0) {
    const int v = f.valuation();
    if (v <= f.order()) throw NotQuasiModular("no quasi-modular forms of weight " + std::to_string(weight), v);
    return {};
  }

  GeneratorPowers gens(f.order());
  std::vector<PowerSeries> columns;
  columns.reserve(basis.size());
  for (const auto& m : basis) columns.push_back(gens.monomial(m));

  // Gaussian elimination on rows 0..solve_rows-1 of [columns | f].
  const int solve_rows = f.order() + 1 - margin;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(solve_rows), std::vector<Rational>(basis.size() + 1));
  for (int r = 0; r < solve_rows; ++r) {
    for (int c = 0; c < dim; ++c) a[r][c] = columns[c][r];
    a[r][dim] = f[r];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < dim && row < solve_rows; ++col) {
    int p = row;
    while (p < solve_rows && a[p][col] == 0) ++p;
    if (p == solve_rows) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (int c = col; c <= dim; ++c) a[row][c] *= inv;
    for (int r = 0; r < solve_rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (int c = col; c <= dim; ++c) a[r][c] -= factor * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivot_col.size()) < dim) {
    std::ostringstream msg;
    msg << "weight-" << weight << " basis is not resolved by " << solve_rows << " coefficients";
    throw InsufficientOrder(msg.str(), f.order() + 1);
  }

  QMPolynomial result;
  for (int i = 0; i < dim; ++i) result.add_term(basis[static_cast<std::size_t>(pivot_col[i])], a[i][dim]);

  PowerSeries residual = f;
  for (int i = 0; i < dim; ++i) residual -= columns[static_cast<std::size_t>(pivot_col[i])] * a[i][dim];
  const int bad = residual.valuation();
  if (bad <= residual.order()) {
    std::ostringstream msg;
    msg << "series is not quasi-modular of weight " << weight << ": residual at q^" << bad << " is "
        << to_string(residual[bad]);
    throw NotQuasiModular(msg.str(), bad);
  }
  return result;
}

QMPolynomial reduce_e2k(int k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("reduce_e2k needs an even k >= 4");
  static std::mutex mutex;
  static std::map<int, QMPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  const QMPolynomial value = quasimodularize(eisenstein(k, minimal_quasimodularize_order(k)), k);
  std::lock_guard lock(mutex);
  return cache.emplace(k, value).first->second;
}

QMPolynomial eisenstein_generator(int k) {
  if (k == 2) return QMPolynomial::E2();
  return reduce_e2k(k);
}

}  // namespace lgcy
