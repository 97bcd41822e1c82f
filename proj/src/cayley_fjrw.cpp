#include "lgcy/cayley_fjrw.hpp"

#include "lgcy/bloch_okounkov.hpp"
#include "lgcy/chazy.hpp"

#include <algorithm>
#include <map>

namespace lgcy {

CayleyFrame cayley_frame(int order) {
  if (order < 3) throw std::invalid_argument("cayley_frame needs order >= 3");
  PowerSeries e2 = fjrw_genus1_series(order) * Rational(-24);
  PowerSeries e4 = e2 * e2 - derive(e2, DeriveMode::d_ds) * Rational(12);
  PowerSeries e6 = e2 * e4 - derive(e4, DeriveMode::d_ds) * Rational(3);
  return CayleyFrame{.e2 = std::move(e2), .e4 = std::move(e4), .e6 = std::move(e6)};
}

PowerSeries cayley_transform(const QMPolynomial& p, const CayleyFrame& frame) {
  const int order = frame.order();
  PowerSeries out(Variable::s, order);
  std::map<std::pair<int, int>, PowerSeries> powers;
  auto power = [&](int which, int e) -> const PowerSeries& {
    auto it = powers.find({which, e});
    if (it != powers.end()) return it->second;
    const PowerSeries& base = which == 2 ? frame.e2 : which == 4 ? frame.e4 : frame.e6;
    PowerSeries v = e == 0 ? PowerSeries::constant(Variable::s, 1, order) : pow(base.truncated(order), static_cast<unsigned>(e));
    return powers.emplace(std::pair{which, e}, std::move(v)).first->second;
  };
  for (const auto& [m, c] : p.terms()) out += power(2, m.e2) * power(4, m.e4) * power(6, m.e6) * c;
  return out;
}

const char* label_name(FjrwLabel label) {
  switch (label) {
    case FjrwLabel::one: return "1";
    case FjrwLabel::phi: return "phi";
    case FjrwLabel::b1: return "b1";
    case FjrwLabel::b2: return "b2";
  }
  return "?";
}

const char* gw_label_name(FjrwLabel label) {
  switch (label) {
    case FjrwLabel::one: return "1";
    case FjrwLabel::phi: return "omega";
    case FjrwLabel::b1: return "e1";
    case FjrwLabel::b2: return "e2";
  }
  return "?";
}

int label_degree(FjrwLabel label) {
  switch (label) {
    case FjrwLabel::one: return 0;
    case FjrwLabel::phi: return 2;
    default: return 1;
  }
}

bool label_is_odd(FjrwLabel label) { return label == FjrwLabel::b1 || label == FjrwLabel::b2; }

int fjrw_genus(std::span<const FjrwInsertion> insertions) {
  if (insertions.empty()) throw std::invalid_argument("no insertions");
  // sum (psi + deg/2) = 2g - 2 + N
  int twice = 0;
  for (const auto& ins : insertions) {
    if (ins.psi < 0) throw std::invalid_argument("psi powers must be nonnegative");
    twice += 2 * ins.psi + label_degree(ins.label) - 2;
  }
  if (twice % 4 != 0 || twice < -4) throw std::invalid_argument("insertions violate the dimension constraint");
  return twice / 4 + 1;
}

PowerSeries fjrw_correlation(std::span<const FjrwInsertion> insertions, const CayleyFrame& frame) {
  if (insertions.empty()) throw std::invalid_argument("no insertions");
  const PowerSeries zero(Variable::s, frame.order());
  int odd = 0;
  for (std::size_t i = 0; i < insertions.size(); ++i) {
    if (!label_is_odd(insertions[i].label)) continue;
    ++odd;
    for (std::size_t j = i + 1; j < insertions.size(); ++j)
      if (insertions[j] == insertions[i]) return zero;
  }
  if (odd % 2 == 1) return zero;
  std::vector<int> legs;
  for (const auto& ins : insertions) {
    if (ins.label != FjrwLabel::phi) throw Unsupported("only stationary phi insertions are supported");
    if (ins.psi < 0) throw std::invalid_argument("psi powers must be nonnegative");
    legs.push_back(ins.psi);
  }
  if (static_cast<int>(legs.size()) > kMaxLegs) throw Unsupported("at most four insertions are supported");
  int sum = 0;
  for (int l : legs) sum += l;
  if (sum % 2 != 0) return zero;
  const QMPolynomial gw = connected_from_disconnected(legs, disconnected_table(legs));
  return cayley_transform(gw, frame);
}

PowerSeries fjrw_onepoint_all_genus(int genus, const CayleyFrame& frame) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  const WeierstrassTable b = b_table(2 * genus);
  const int order = frame.order();
  const PowerSeries x = frame.e2.truncated(order) * rat(-1, 24);
  const PowerSeries y = frame.e4.truncated(order) * rat(1, 24);
  const PowerSeries z = frame.e6 * rat(-1, 108);
  PowerSeries out(Variable::s, order);
  for (int n = 0; 3 * n <= genus; ++n) {
    for (int m = 0; 2 * m + 3 * n <= genus; ++m) {
      const int l = genus - 2 * m - 3 * n;
      const Rational c = b.at(m, n) / Rational(factorial(static_cast<unsigned long>(l)));
      if (c == 0) continue;
      out += pow(x, static_cast<unsigned>(l)) * pow(y, static_cast<unsigned>(m)) * pow(z, static_cast<unsigned>(n)) * c;
    }
  }
  return out;
}

std::vector<std::pair<int, Rational>> extract_fjrw_invariants(const PowerSeries& f, int base_n) {
  std::vector<std::pair<int, Rational>> out;
  for (int m = 0; m <= f.order(); ++m)
    out.emplace_back(base_n + m, Rational(factorial(static_cast<unsigned long>(m))) * f[m]);
  return out;
}

std::vector<GenusZeroValue> genus_zero_data() {
  using L = FjrwLabel;
  return {{{L::one, L::one, L::phi}, 1}, {{L::one, L::b1, L::b2}, 1}, {{L::one, L::b2, L::b1}, -1}};
}

Rational genus_zero_primary(std::span<const FjrwLabel> insertions) {
  if (insertions.size() < 3) throw std::invalid_argument("genus-zero invariants need at least three insertions");
  if (insertions.size() > 3) return 0;
  // F_0 = u0^2 u / 2 + u0 u1 u2 with odd u1, u2
  std::vector<FjrwLabel> sorted(insertions.begin(), insertions.end());
  std::sort(sorted.begin(), sorted.end());
  using L = FjrwLabel;
  if (sorted == std::vector<L>{L::one, L::one, L::phi}) return 1;
  if (sorted == std::vector<L>{L::one, L::b1, L::b2}) {
    const auto b1 = std::find(insertions.begin(), insertions.end(), L::b1);
    const auto b2 = std::find(insertions.begin(), insertions.end(), L::b2);
    return b1 < b2 ? 1 : -1;
  }
  return 0;
}

}  // namespace lgcy
