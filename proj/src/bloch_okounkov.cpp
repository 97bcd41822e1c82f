#include "lgcy/bloch_okounkov.hpp"

#include "lgcy/modular_forms.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace lgcy {

Rational WeierstrassTable::at(int m, int n) const {
  if (m < 0 || n < 0) return 0;
  if (4 * m + 6 * n > bound_) throw std::out_of_range("Weierstrass table index beyond bound");
  auto it = entries_.find({m, n});
  return it == entries_.end() ? Rational(0) : it->second;
}

void WeierstrassTable::set(int m, int n, Rational value) {
  if (m < 0 || n < 0 || 4 * m + 6 * n > bound_) throw std::out_of_range("Weierstrass table index beyond bound");
  entries_[{m, n}] = std::move(value);
}

namespace {

// (E4/24)^m (-E6/108)^n
QMPolynomial weierstrass_generator(int m, int n) {
  Rational c = pow(rat(1, 24), static_cast<unsigned long>(m)) * pow(rat(-1, 108), static_cast<unsigned long>(n));
  return QMPolynomial::monomial({0, m, n}, c);
}

void require_order(int order, int minimum, const char* what) {
  if (order < minimum) throw std::invalid_argument(std::string(what) + ": order too small");
}

// z * exp(sum_{k >= first} B_{2k}/(2k (2k)!) E_{2k} z^{2k}) through z^order.
ZLaurent exp_route(int first, int order) {
  std::vector<QMPolynomial> c(static_cast<std::size_t>(order));
  for (int k = first; 2 * k <= order - 1; ++k) {
    const Rational b = bernoulli(static_cast<unsigned>(2 * k)) /
                       (Rational(2 * k) * Rational(factorial(static_cast<unsigned long>(2 * k))));
    c[static_cast<std::size_t>(2 * k)] = eisenstein_generator(2 * k) * b;
  }
  ZLaurent inner(Variable::z, 0, order - 1, std::move(c));
  return exp(inner).shifted(1);
}

}  // namespace

WeierstrassTable weierstrass_a(int bound) {
  if (bound < 0) throw std::invalid_argument("weierstrass_a: negative bound");
  WeierstrassTable a(bound);
  a.set(0, 0, 1);
  for (int w = 2; w <= bound; w += 2) {
    for (int n = 0; 6 * n <= w; ++n) {
      if ((w - 6 * n) % 4 != 0) continue;
      const int m = (w - 6 * n) / 4;
      const int d = 4 * m + 6 * n;
      Rational v = Rational(3 * (m + 1)) * a.at(m + 1, n - 1) + rat(16, 3) * Rational(n + 1) * a.at(m - 2, n + 1) -
                   rat(1, 6) * Rational((d - 1) * (d - 2)) * a.at(m - 1, n);
      a.set(m, n, std::move(v));
    }
  }
  return a;
}

ZLaurent sigma_tilde(int order) {
  require_order(order, 1, "sigma_tilde");
  return exp_route(2, order);
}

ZLaurent sigma_tilde_weierstrass(int order) {
  require_order(order, 1, "sigma_tilde_weierstrass");
  const WeierstrassTable a = weierstrass_a(order - 1);
  std::vector<QMPolynomial> c(static_cast<std::size_t>(order) + 1);
  for (const auto& [mn, value] : a.entries()) {
    const int e = 4 * mn.first + 6 * mn.second + 1;
    c[static_cast<std::size_t>(e)] +=
        weierstrass_generator(mn.first, mn.second) * (value / Rational(factorial(static_cast<unsigned long>(e))));
  }
  return ZLaurent(Variable::z, 0, order, std::move(c));
}

WeierstrassTable b_table(int bound) {
  if (bound < 0) throw std::invalid_argument("b_table: negative bound");
  const ZLaurent inv = reciprocal(sigma_tilde(bound + 1));
  WeierstrassTable b(bound);
  for (int w = 0; w <= bound; w += 2) {
    const QMPolynomial c = inv.coefficient(w - 1);
    for (const auto& [mono, value] : c.terms()) {
      if (mono.e2 != 0 || mono.weight() != w) throw std::logic_error("b_table: unexpected monomial in 1/sigma");
      b.set(mono.e4, mono.e6, value / weierstrass_generator(mono.e4, mono.e6).coefficient(mono));
    }
  }
  return b;
}

ZLaurent prime_form(int order) {
  require_order(order, 1, "prime_form");
  static std::mutex mutex;
  static std::map<int, ZLaurent> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  ZLaurent direct = exp_route(1, order);
  std::vector<QMPolynomial> e2(static_cast<std::size_t>(order));
  if (order - 1 >= 2) e2[2] = QMPolynomial::E2() * rat(1, 24);
  const ZLaurent via_sigma = exp(ZLaurent(Variable::z, 0, order - 1, std::move(e2))) * sigma_tilde_weierstrass(order);
  if (!(via_sigma.truncated(order) == direct))
    throw std::logic_error("prime_form: Eisenstein and Weierstrass routes disagree");
  std::lock_guard lock(mutex);
  return cache.emplace(order, std::move(direct)).first->second;
}

ZLaurent one_over_theta(int weight_bound) {
  require_order(weight_bound, 0, "one_over_theta");
  return reciprocal(prime_form(weight_bound + 1));
}

ZLaurent log_theta_deriv(int m, int weight_bound) {
  if (m < 1) throw std::invalid_argument("log_theta_deriv needs m >= 1");
  // dlogTheta = 1/z + sum_{k>=1} B_{2k} E_{2k} z^{2k-1} / (2k)!
  const int order = weight_bound - 1;
  std::vector<QMPolynomial> c;
  if (order >= -1) {
    c.resize(static_cast<std::size_t>(order + 2));
    c[0] = 1;
    for (int k = 1; 2 * k - 1 <= order; ++k) {
      c[static_cast<std::size_t>(2 * k)] =
          eisenstein_generator(2 * k) *
          (bernoulli(static_cast<unsigned>(2 * k)) / Rational(factorial(static_cast<unsigned long>(2 * k))));
    }
  }
  ZLaurent d(Variable::z, -1, order, std::move(c));
  for (int i = 1; i < m; ++i) d = d.derivative();
  return d;
}

QMPolynomial MultiZPoly::coefficient(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != legs_) throw std::invalid_argument("wrong number of exponents");
  int weight = 0;
  for (int e : exponents) {
    if (e < -1) return {};
    weight += e + 1;
  }
  if (weight > weight_bound_) throw std::out_of_range("coefficient beyond the computed weight bound");
  auto it = terms_.find(Exponents(exponents.begin(), exponents.end()));
  return it == terms_.end() ? QMPolynomial{} : it->second;
}

void MultiZPoly::add(Exponents exponents, const QMPolynomial& value) {
  if (value.is_zero()) return;
  auto& slot = terms_[std::move(exponents)];
  slot += value;
}

namespace {

using Entry = std::optional<ZLaurent>;

ZLaurent constant(const QMPolynomial& c, int order) { return ZLaurent(Variable::z, 0, order, {c}); }

// Cofactor expansion along the first column; nullopt entries are exact zeros.
Entry determinant(const std::vector<std::vector<Entry>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Entry total;
  for (std::size_t r = 0; r < n; ++r) {
    if (!m[r][0]) continue;
    std::vector<std::vector<Entry>> minor;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      minor.emplace_back(m[i].begin() + 1, m[i].end());
    }
    Entry sub = determinant(minor);
    if (!sub) continue;
    ZLaurent term = *m[r][0] * *sub;
    if (r % 2 == 1) term = -term;
    total = total ? *total + term : term;
  }
  return total;
}

std::vector<std::vector<Rational>> inverse_vandermonde(int points) {
  const auto p = static_cast<std::size_t>(points);
  std::vector<std::vector<Rational>> a(p, std::vector<Rational>(2 * p));
  for (std::size_t r = 0; r < p; ++r) {
    Rational x = Rational(static_cast<long>(r) + 1);
    Rational power = 1;
    for (std::size_t c = 0; c < p; ++c) {
      a[r][c] = power;
      power *= x;
    }
    a[r][p + r] = 1;
  }
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < p; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * p; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(p, std::vector<Rational>(p));
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < p; ++c) inv[r][c] = a[r][p + c];
  return inv;
}

void check_legs(int legs) {
  if (legs < 1 || legs > kMaxLegs) throw std::invalid_argument("number of legs must be between 1 and 4");
}

}  // namespace

MultiZPoly npoint_from_evaluator(int legs, int weight_bound, const RayEvaluator& evaluate) {
  check_legs(legs);
  if (weight_bound < 0) throw std::invalid_argument("negative weight bound");
  const int axes = legs - 1;
  const int points = weight_bound + 1;
  std::size_t grid = 1;
  for (int i = 0; i < axes; ++i) grid *= static_cast<std::size_t>(points);

  // values[d][g]: degree-d part of G at grid point g
  std::vector<std::vector<QMPolynomial>> values(static_cast<std::size_t>(points), std::vector<QMPolynomial>(grid));
  std::vector<Rational> a(static_cast<std::size_t>(legs), Rational(1));
  for (std::size_t g = 0; g < grid; ++g) {
    std::size_t rest = g;
    for (int i = 0; i < axes; ++i) {
      a[static_cast<std::size_t>(i)] = Rational(static_cast<long>(rest % static_cast<std::size_t>(points)) + 1);
      rest /= static_cast<std::size_t>(points);
    }
    const ZLaurent series = evaluate(a, weight_bound);
    if (series.order() < weight_bound || (!series.is_zero() && series.valuation() < 0))
      throw std::logic_error("ray evaluation lost precision");
    for (int d = 0; d <= weight_bound; ++d) values[static_cast<std::size_t>(d)][g] = series.coefficient(d);
  }

  const auto vinv = inverse_vandermonde(points);
  MultiZPoly out(legs, weight_bound);
  for (int d = 0; d <= weight_bound; ++d) {
    auto& v = values[static_cast<std::size_t>(d)];
    std::size_t stride = 1;
    for (int axis = 0; axis < axes; ++axis) {
      std::vector<QMPolynomial> next(grid);
      const auto p = static_cast<std::size_t>(points);
      for (std::size_t g = 0; g < grid; ++g) {
        const std::size_t row = (g / stride) % p;
        const std::size_t base = g - row * stride;
        QMPolynomial acc;
        for (std::size_t k = 0; k < p; ++k) {
          const Rational& c = vinv[row][k];
          if (c == 0 || v[base + k * stride].is_zero()) continue;
          acc += v[base + k * stride] * c;
        }
        next[g] = std::move(acc);
      }
      v = std::move(next);
      stride *= p;
    }
    for (std::size_t g = 0; g < grid; ++g) {
      if (v[g].is_zero()) continue;
      MultiZPoly::Exponents e(static_cast<std::size_t>(legs));
      std::size_t rest = g;
      int used = 0;
      for (int i = 0; i < axes; ++i) {
        const int f = static_cast<int>(rest % static_cast<std::size_t>(points));
        rest /= static_cast<std::size_t>(points);
        e[static_cast<std::size_t>(i)] = f - 1;
        used += f;
      }
      if (used > d) throw std::logic_error("interpolation produced a monomial above the total degree");
      e.back() = d - used - 1;
      out.add(std::move(e), v[g]);
    }
  }
  return out;
}

MultiZPoly npoint(int legs, int weight_bound) {
  check_legs(legs);
  if (weight_bound < 0) throw std::invalid_argument("negative weight bound");
  const int n = legs;
  const int inner = weight_bound + 1;
  const int exact = weight_bound + n + 10;

  // ratio[k](w) = Theta^{(k)}(w) / (k! Theta(w))
  const ZLaurent inv_theta = one_over_theta(inner + 1);
  const ZLaurent theta = prime_form(inner + n + 2);
  std::vector<ZLaurent> ratio;
  ratio.push_back(constant(1, exact));
  ZLaurent deriv = theta;
  for (int k = 1; k <= n; ++k) {
    deriv = deriv.derivative();
    ratio.push_back(deriv * inv_theta * (1 / Rational(factorial(static_cast<unsigned long>(k)))));
  }
  const ZLaurent theta_exact = prime_form(n + 2);

  RayEvaluator evaluate = [&](std::span<const Rational> a, int) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Entry sum;
    do {
      std::vector<Rational> partial(static_cast<std::size_t>(n) + 1, Rational(0));
      for (int m = 1; m <= n; ++m)
        partial[static_cast<std::size_t>(m)] = partial[static_cast<std::size_t>(m - 1)] + a[static_cast<std::size_t>(perm[static_cast<std::size_t>(m - 1)])];
      std::map<std::pair<int, int>, ZLaurent> scaled;
      std::vector<std::vector<Entry>> m(static_cast<std::size_t>(n), std::vector<Entry>(static_cast<std::size_t>(n)));
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          Entry& slot = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
          if (j == n) {
            const QMPolynomial c = theta_exact.coefficient(n - i + 1);
            if (!c.is_zero()) slot = constant(c, exact);
            continue;
          }
          const int k = j - i + 1;
          if (k < 0) continue;
          if (k == 0) {
            slot = ratio[0];
            continue;
          }
          const int s = n - j;
          auto it = scaled.find({k, s});
          if (it == scaled.end())
            it = scaled.emplace(std::pair{k, s}, ratio[static_cast<std::size_t>(k)].scaled(partial[static_cast<std::size_t>(s)])).first;
          slot = it->second;
        }
      }
      Entry det = determinant(m);
      if (det) sum = sum ? *sum + *det : *det;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational prod = 1;
    Rational total = 0;
    for (const auto& x : a) {
      prod *= x;
      total += x;
    }
    if (!sum) return ZLaurent::zero(Variable::z, weight_bound);
    return (*sum * inv_theta.scaled(total)).shifted(n) * prod;
  };
  return npoint_from_evaluator(legs, weight_bound, evaluate);
}

MultiZPoly npoint_two_closed_form(int weight_bound) {
  if (weight_bound < 0) throw std::invalid_argument("negative weight bound");
  const ZLaurent inv_theta = one_over_theta(weight_bound + 2);
  const ZLaurent dlog = log_theta_deriv(1, weight_bound + 2);
  RayEvaluator evaluate = [&](std::span<const Rational> a, int) {
    const ZLaurent num = dlog.scaled(a[0]) + dlog.scaled(a[1]);
    return (num * inv_theta.scaled(a[0] + a[1])).shifted(2) * (a[0] * a[1]);
  };
  return npoint_from_evaluator(2, weight_bound, evaluate);
}

namespace {

int legs_weight(std::span<const int> legs) {
  if (legs.empty()) throw std::invalid_argument("at least one leg is required");
  int w = 0;
  for (int l : legs) {
    if (l < -2) throw std::invalid_argument("psi powers must be >= -2");
    w += l + 2;
  }
  return w;
}

}  // namespace

QMPolynomial stationary_invariant(const MultiZPoly& table, std::span<const int> legs) {
  if (static_cast<int>(legs.size()) != table.legs()) throw std::invalid_argument("leg count does not match the table");
  legs_weight(legs);
  std::vector<int> e;
  for (int l : legs) e.push_back(l + 1);
  return table.coefficient(e);
}

QMPolynomial stationary_invariant(std::span<const int> legs) {
  const int w = legs_weight(legs);
  const int n = static_cast<int>(legs.size());
  check_legs(n);
  if (n == 1) return one_over_theta(w).coefficient(legs[0] + 1);
  return stationary_invariant(npoint(n, w), legs);
}

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// All set partitions of {0..n-1} as restricted growth strings.
void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      visit(block, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

QMPolynomial connected(const std::vector<int>& legs, const DisconnectedTable& table,
                       std::map<std::vector<int>, QMPolynomial>& memo) {
  const std::vector<int> key = sorted(legs);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  auto disc = table.find(key);
  if (disc == table.end()) throw MissingSubtable("missing disconnected value for a sub-multiset of legs");
  QMPolynomial value = disc->second;
  const int n = static_cast<int>(key.size());
  for_each_set_partition(n, [&](const std::vector<int>& block, int blocks) {
    if (blocks == 1) return;
    QMPolynomial prod = 1;
    for (int b = 0; b < blocks && !prod.is_zero(); ++b) {
      std::vector<int> part;
      for (int i = 0; i < n; ++i)
        if (block[static_cast<std::size_t>(i)] == b) part.push_back(key[static_cast<std::size_t>(i)]);
      prod *= connected(part, table, memo);
    }
    value -= prod;
  });
  return memo.emplace(key, std::move(value)).first->second;
}

}  // namespace

QMPolynomial connected_from_disconnected(std::span<const int> legs, const DisconnectedTable& table) {
  legs_weight(legs);
  std::map<std::vector<int>, QMPolynomial> memo;
  return connected(std::vector<int>(legs.begin(), legs.end()), table, memo);
}

DisconnectedTable disconnected_table(std::span<const int> legs) {
  const int w = legs_weight(legs);
  const int n = static_cast<int>(legs.size());
  check_legs(n);
  std::map<int, MultiZPoly> tables;
  DisconnectedTable out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(legs[static_cast<std::size_t>(i)]);
    std::sort(sub.begin(), sub.end());
    if (out.contains(sub)) continue;
    const int k = static_cast<int>(sub.size());
    auto it = tables.find(k);
    if (it == tables.end()) it = tables.emplace(k, npoint(k, w)).first;
    out.emplace(sub, stationary_invariant(it->second, sub));
  }
  return out;
}

}  // namespace lgcy
