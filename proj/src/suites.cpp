#include "lgcy/suites.hpp"

#include "lgcy/bloch_okounkov.hpp"
#include "lgcy/cayley_fjrw.hpp"
#include "lgcy/chazy.hpp"
#include "lgcy/hae_virasoro.hpp"
#include "lgcy/mirror_hypergeometric.hpp"
#include "lgcy/modular_forms.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace lgcy {

namespace {

std::optional<int> first_difference(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int i = 0; i <= order; ++i)
    if (a[i] != b[i]) return i;
  return std::nullopt;
}

void add_series(Report& r, const std::string& name, const std::string& anchor, const PowerSeries& lhs,
                const PowerSeries& rhs) {
  const auto fail = first_difference(lhs, rhs);
  r.add(name, anchor, !fail, "through " + std::string(variable_name(lhs.variable())) + "^" +
                                 std::to_string(std::min(lhs.order(), rhs.order())), fail);
}

void add_equal(Report& r, const std::string& name, const std::string& anchor, const QMPolynomial& got,
               const QMPolynomial& expected) {
  r.add(name, anchor, got == expected, got == expected ? std::string() : "got " + got.to_string());
}

PowerSeries s_series(std::initializer_list<std::pair<int, Rational>> terms, int order) {
  PowerSeries p(Variable::s, order);
  for (const auto& [n, c] : terms) p[n] = c;
  return p;
}

Report ramanujan_suite(const RunConfig& cfg) {
  Report r("ramanujan");
  const int d = cfg.q_order;
  for (const auto& [name, g] : std::vector<std::pair<std::string, QMPolynomial>>{
           {"E2", QMPolynomial::E2()}, {"E4", QMPolynomial::E4()}, {"E6", QMPolynomial::E6()}})
    add_series(r, "theta_q " + name + " = Ramanujan derivative", "Ramanujan identities",
               derive(qm_eval(g, d), DeriveMode::theta_q), qm_eval(ramanujan_derive(g), d));
  const QMPolynomial mixed = pow(QMPolynomial::E2(), 3) - QMPolynomial::E2() * QMPolynomial::E4() * Rational(2) +
                             QMPolynomial::E6() * rat(1, 7);
  add_series(r, "theta_q commutes with evaluation on E2^3 - 2 E2 E4 + E6/7", "differential ring isomorphism",
             derive(qm_eval(mixed, d), DeriveMode::theta_q), qm_eval(ramanujan_derive(mixed), d));
  add_equal(r, "E8 = E4^2", "modular forms of weight 8", reduce_e2k(8), pow(QMPolynomial::E4(), 2));
  add_equal(r, "E10 = E4 E6", "modular forms of weight 10", reduce_e2k(10), QMPolynomial::E4() * QMPolynomial::E6());
  add_equal(r, "fit of theta_q E2 at weight 4", "quasimodular fit",
            quasimodularize(derive(eisenstein(2, d), DeriveMode::theta_q), 4),
            (pow(QMPolynomial::E2(), 2) - QMPolynomial::E4()) * rat(1, 12));
  return r;
}

Report chazy_suite(const RunConfig& cfg) {
  Report r("chazy");
  const int d = cfg.q_order;
  const PowerSeries e2 = eisenstein(2, d);
  add_series(r, "E2 solves Chazy", "Chazy equation in theta_q", chazy_residual(e2, DeriveMode::theta_q),
             PowerSeries(Variable::q, d));
  const int so = std::max(cfg.s_order, 9);
  const PowerSeries f = chazy_solve_s(fjrw_initial_data(), so);
  add_series(r, "formal solution solves Chazy in s", "Chazy equation in d/ds", chazy_residual(f, DeriveMode::d_ds),
             PowerSeries(Variable::s, so - 3));
  add_series(r, "C E2 = -s^2/9 - s^5/1215 - s^8/459270 + ...", "elliptic expansion of E2", f.truncated(8),
             s_series({{2, rat(-1, 9)}, {5, rat(-1, 1215)}, {8, rat(-1, 459270)}}, 8));
  const auto inv = extract_fjrw_invariants(fjrw_genus1_series(so), 1);
  const std::map<int, Rational> expected{{1, 0}, {2, 0}, {3, rat(1, 108)}, {4, 0}, {5, 0}, {6, rat(1, 243)}, {9, rat(8, 2187)}};
  for (const auto& [n, v] : expected) {
    const Rational got = inv[static_cast<std::size_t>(n - 1)].second;
    r.add("Theta_{1," + std::to_string(n) + "} = " + to_string(v), "genus-one FJRW invariants", got == v,
          got == v ? std::string() : "got " + to_string(got));
  }
  const CayleyFrame frame = cayley_frame(so);
  auto dd = [](const PowerSeries& p) { return derive(p, DeriveMode::d_ds); };
  add_series(r, "(C E2)' = ((C E2)^2 - C E4)/12", "Ramanujan identities in the Cayley frame", dd(frame.e2),
             (frame.e2 * frame.e2 - frame.e4) * rat(1, 12));
  add_series(r, "(C E4)' = (C E2 C E4 - C E6)/3", "Ramanujan identities in the Cayley frame", dd(frame.e4),
             (frame.e2 * frame.e4 - frame.e6) * rat(1, 3));
  add_series(r, "(C E6)' = (C E2 C E6 - (C E4)^2)/2", "Ramanujan identities in the Cayley frame", dd(frame.e6),
             (frame.e2 * frame.e6 - frame.e4 * frame.e4) * rat(1, 2));
  add_series(r, "C E4 = 8s/3 + 5s^4/81 + 2s^7/5103 + ...", "Cayley image of E4", frame.e4.truncated(7),
             s_series({{1, rat(8, 3)}, {4, rat(5, 81)}, {7, rat(2, 5103)}}, 7));
  add_series(r, "C E6 = -8 - 28s^3/27 - 7s^6/405 + ...", "Cayley image of E6", frame.e6.truncated(6),
             s_series({{0, -8}, {3, rat(-28, 27)}, {6, rat(-7, 405)}}, 6));
  return r;
}

Report bp_suite(const RunConfig& cfg) {
  Report r("bp");
  std::mt19937 rng(20240229u);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  bool all = true;
  std::string first;
  for (int trial = 0; trial < 20; ++trial) {
    PowerSeries g(Variable::s, 20);
    for (int n = 0; n <= 20; ++n) g[n] = rat(num(rng), den(rng));
    const PowerSeries lhs = chazy_residual(g * Rational(-24), DeriveMode::d_ds);
    const PowerSeries rhs = bp_residual(g, DeriveMode::d_ds) * Rational(-480);
    if (lhs != rhs) {
      all = false;
      if (first.empty()) first = "trial " + std::to_string(trial);
    }
  }
  r.add("Chazy(-24 g) = -480 BP(g) on 20 random series", "Chazy and Bershadsky-Cecotti-Ooguri-Vafa forms", all, first);
  const PowerSeries c2 = eisenstein(2, cfg.q_order) * rat(-1, 24);
  add_series(r, "-E2/24 solves the BP form", "genus-one GW function", bp_residual(c2, DeriveMode::theta_q),
             PowerSeries(Variable::q, cfg.q_order));
  const PowerSeries phi = fjrw_genus1_series(std::max(cfg.s_order, 4));
  add_series(r, "<<phi>>_1 solves the BP form in s", "genus-one FJRW function", bp_residual(phi, DeriveMode::d_ds),
             PowerSeries(Variable::s, phi.order() - 3));
  return r;
}

QMPolynomial onepoint_b_formula(int g, const WeierstrassTable& b) {
  QMPolynomial out;
  const QMPolynomial x = QMPolynomial::C2();
  const QMPolynomial y = QMPolynomial::E4() * rat(1, 24);
  const QMPolynomial z = QMPolynomial::E6() * rat(-1, 108);
  for (int n = 0; 3 * n <= g; ++n)
    for (int m = 0; 2 * m + 3 * n <= g; ++m) {
      const int l = g - 2 * m - 3 * n;
      const Rational c = b.at(m, n) / Rational(factorial(static_cast<unsigned long>(l)));
      if (c != 0)
        out += pow(x, static_cast<unsigned>(l)) * pow(y, static_cast<unsigned>(m)) * pow(z, static_cast<unsigned>(n)) * c;
    }
  return out;
}

Report prime_form_suite(const RunConfig& cfg) {
  Report r("prime-form");
  prime_form(cfg.z_order + 1);
  r.add("Eisenstein and Weierstrass routes agree", "prime form e^{E2 z^2/24} sigma(z)", true,
        "through z^" + std::to_string(cfg.z_order + 1));
  const ZLaurent inv = one_over_theta(std::max(cfg.z_order, 4));
  add_equal(r, "[z^-1] 1/Theta = 1", "one-point function", inv.coefficient(-1), 1);
  add_equal(r, "[z^1] 1/Theta = -E2/24", "genus-one GW function", inv.coefficient(1), QMPolynomial::C2());
  add_equal(r, "[z^3] 1/Theta = (E4/5 + E2^2/2)/576", "genus-two one-point function", inv.coefficient(3),
            (QMPolynomial::E4() * rat(1, 5) + pow(QMPolynomial::E2(), 2) * rat(1, 2)) * rat(1, 576));
  const WeierstrassTable a = weierstrass_a(6);
  r.add("a_{1,0} = -1, a_{0,1} = -3", "Weierstrass recursion", a.at(1, 0) == -1 && a.at(0, 1) == -3);
  const int gmax = cfg.z_order / 2;
  const WeierstrassTable b = b_table(2 * gmax);
  r.add("b_{0,0} = 1, b_{1,0} = 1/120", "Laurent expansion of 1/sigma", b.at(0, 0) == 1 && b.at(1, 0) == rat(1, 120));
  for (int g = 1; g <= gmax; ++g)
    add_equal(r, "one-point genus " + std::to_string(g) + " equals the b_{m,n} formula",
              "one-point GW function via 1/sigma", inv.coefficient(2 * g - 1), onepoint_b_formula(g, b));
  r.merge(prime_form_anomaly_check(cfg.z_order));
  return r;
}

Report weights_suite(const RunConfig& cfg) {
  Report r("weights");
  const ZLaurent inv = one_over_theta(cfg.z_order);
  const int gmax = cfg.z_order / 2;
  for (int g = 1; g <= gmax; ++g) {
    const QMPolynomial c = inv.coefficient(2 * g - 1);
    bool ok = c.weight() == 2 * g;
    std::string detail;
    try {
      ok = ok && quasimodularize(qm_eval(c, cfg.q_order), 2 * g, cfg.margin) == c;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    r.add("one-point genus " + std::to_string(g) + " is quasimodular of weight " + std::to_string(2 * g),
          "weight of stationary correlation functions", ok, detail);
  }
  const int w2 = std::min(cfg.z_order, 12);
  const MultiZPoly two = npoint(2, w2);
  bool homogeneous = true;
  for (const auto& [e, c] : two.terms()) homogeneous = homogeneous && c.weight() == e[0] + e[1] + 2;
  r.add("(q)_inf F_2 coefficients have weight l_1 + l_2 + 4", "weight of stationary correlation functions", homogeneous,
        std::to_string(two.terms().size()) + " coefficients");
  r.add("determinant formula for N = 2 equals the closed form", "two-point function", two == npoint_two_closed_form(w2));
  bool symmetric = true;
  for (const auto& [e, c] : two.terms()) symmetric = symmetric && two.coefficient(std::vector<int>{e[1], e[0]}) == c;
  r.add("(q)_inf F_2 is symmetric", "permutation sum", symmetric);

  const std::vector<int> legs{0, 0};
  const QMPolynomial conn = connected_from_disconnected(legs, disconnected_table(legs));
  add_equal(r, "connected <<omega, omega>> = -(E2^2 - E4)/288", "divisor equation", conn,
            (pow(QMPolynomial::E2(), 2) - QMPolynomial::E4()) * rat(-1, 288));
  add_equal(r, "connected <<omega, omega>> = theta_q <<omega>>", "divisor equation", conn,
            ramanujan_derive(QMPolynomial::C2()));
  const PowerSeries omega = qm_eval(QMPolynomial::C2(), cfg.q_order);
  r.add("<<omega>>_1 = -1/24 + q + ...", "genus-one degree 0 and 1 invariants", omega[0] == rat(-1, 24) && omega[1] == 1);

  const CayleyFrame frame = cayley_frame(std::max(cfg.s_order, 3));
  for (int g = 1; g <= gmax; ++g)
    add_series(r, "FJRW one-point genus " + std::to_string(g) + " from b_{m,n} equals the Cayley image",
               "LG/CY correspondence for one-point functions", fjrw_onepoint_all_genus(g, frame),
               cayley_transform(inv.coefficient(2 * g - 1), frame));
  const std::vector<FjrwInsertion> one{{FjrwLabel::phi, 0}};
  const std::vector<FjrwInsertion> pair{{FjrwLabel::phi, 0}, {FjrwLabel::phi, 0}};
  add_series(r, "<<phi, phi>> = d/ds <<phi>>", "divisor equation through the Cayley frame", fjrw_correlation(pair, frame),
             derive(fjrw_correlation(one, frame), DeriveMode::d_ds));
  return r;
}

Report hae_suite(const RunConfig& cfg) {
  Report r("hae");
  r.merge(prime_form_anomaly_check(cfg.z_order));
  r.merge(hae_onepoint_check(cfg.z_order / 2, cayley_frame(std::max(cfg.s_order, 3))));
  // d/dC2 (q)_inf F_2 = (z1+z2)^2 (q)_inf F_2 - 2 (z1+z2) / Theta(z1+z2)
  const int w = std::min(cfg.z_order, 12);
  const MultiZPoly two = npoint(2, w);
  const ZLaurent inv = one_over_theta(w);
  bool ok = true;
  std::string first;
  for (int e1 = -1; e1 <= w; ++e1)
    for (int e2 = -1; e1 + e2 + 2 <= w; ++e2) {
      const std::vector<int> e{e1, e2};
      auto at = [&](int a, int b) { return two.coefficient(std::vector<int>{a, b}); };
      QMPolynomial rhs = at(e1 - 2, e2) + at(e1 - 1, e2 - 1) * Rational(2) + at(e1, e2 - 2);
      if (e1 >= 0 && e2 >= 0)
        rhs -= inv.coefficient(e1 + e2 - 1) *
               (Rational(2) * Rational(binomial(static_cast<unsigned long>(e1 + e2), static_cast<unsigned long>(e1))));
      if (d_dC2(at(e1, e2)) != rhs) {
        ok = false;
        if (first.empty()) first = "fails at z1^" + std::to_string(e1) + " z2^" + std::to_string(e2);
      }
    }
  r.add("two-point HAE d/dC2 F_2 = (z1+z2)^2 F_2 - 2(z1+z2) F_1(z1+z2)", "anomaly of the two-point function", ok, first);
  return r;
}

Report virasoro_suite(const RunConfig& cfg) {
  Report r("virasoro");
  r.merge(virasoro_check(3, cfg.virasoro_index));
  r.merge(quantization_check(rat(1, 2), 3, 4));
  return r;
}

Report mirror_suite(const RunConfig& cfg) {
  Report r("mirror");
  r.merge(appendix_identity_checks(std::max(cfg.q_order, 12)));
  r.merge(mirror_map_check(std::max(cfg.q_order, 10)));
  return r;
}

using SuiteFn = std::function<Report(const RunConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> list{
      {"ramanujan", ramanujan_suite}, {"chazy", chazy_suite},       {"bp", bp_suite},
      {"prime-form", prime_form_suite}, {"weights", weights_suite}, {"hae", hae_suite},
      {"virasoro", virasoro_suite},   {"mirror", mirror_suite}};
  return list;
}

Report run_guarded(const std::string& name, const SuiteFn& fn, const RunConfig& cfg) {
  try {
    return fn(cfg);
  } catch (const std::exception& e) {
    Report r(name);
    r.add(name + " suite raised an exception", "internal consistency", false, e.what());
    return r;
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

Report run_suite(const std::string& name, const RunConfig& config) {
  if (name == "all") {
    Report all("all");
    for (const auto& [n, fn] : suites()) all.merge(run_guarded(n, fn, config));
    return all;
  }
  for (const auto& [n, fn] : suites())
    if (n == name) return run_guarded(n, fn, config);
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace lgcy
