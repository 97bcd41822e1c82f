#include "lgcy/bloch_okounkov.hpp"
#include "lgcy/cayley_fjrw.hpp"
#include "lgcy/chazy.hpp"
#include "lgcy/hae_virasoro.hpp"
#include "lgcy/mirror_hypergeometric.hpp"
#include "lgcy/modular_forms.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace lgcy;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.note = what;
  }
}

PowerSeries coeffs(Variable v, std::initializer_list<Rational> c) { return PowerSeries(v, std::vector<Rational>(c)); }

Outcome chazy_ramanujan() {
  Outcome o;
  const int d = 27;
  const PowerSeries e2 = eisenstein(2, 30), e4 = eisenstein(4, 30), e6 = eisenstein(6, 30);
  const auto th = [](const PowerSeries& f) { return derive(f, DeriveMode::theta_q); };
  require(o, chazy_residual(e2, DeriveMode::theta_q).truncated(d).is_zero(), "Chazy residual of E2");
  require(o, (th(e2) * Rational(12)).truncated(d) == (e2 * e2 - e4).truncated(d), "theta E2");
  require(o, (th(e4) * Rational(3)).truncated(d) == (e2 * e4 - e6).truncated(d), "theta E4");
  require(o, (th(e6) * Rational(2)).truncated(d) == (e2 * e6 - e4 * e4).truncated(d), "theta E6");
  return o;
}

Outcome bp_chazy() {
  Outcome o;
  std::mt19937 rng(20240229);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
  for (int trial = 0; trial < 20; ++trial) {
    PowerSeries g(Variable::s, 20);
    for (int n = 0; n <= 20; ++n) g[n] = rat(num(rng), den(rng));
    require(o, chazy_residual(g * Rational(-24), DeriveMode::d_ds) == bp_residual(g, DeriveMode::d_ds) * Rational(-480),
            "random series " + std::to_string(trial));
  }
  return o;
}

Outcome fjrw_genus_one() {
  Outcome o;
  const PowerSeries f = chazy_solve_s({0, 0, rat(-2, 9)}, 8);
  require(o, f == coeffs(Variable::s, {0, 0, rat(-1, 9), 0, 0, rat(-1, 1215), 0, 0, rat(-1, 459270)}),
          "elliptic expansion of E2");
  const auto inv = extract_fjrw_invariants(fjrw_genus1_series(12), 1);
  const auto theta = [&](int n) { return inv.at(static_cast<std::size_t>(n - 1)).second; };
  require(o, theta(3) == rat(1, 108), "Theta_{1,3}");
  require(o, theta(4) == 0 && theta(5) == 0, "Theta_{1,4}, Theta_{1,5}");
  require(o, theta(6) == rat(1, 243), "Theta_{1,6}");
  require(o, theta(9) == rat(8, 2187), "Theta_{1,9}");
  return o;
}

Outcome cayley_frame_displays() {
  Outcome o;
  const CayleyFrame f = cayley_frame(9);
  require(o, f.e4.truncated(7) == coeffs(Variable::s, {0, rat(8, 3), 0, 0, rat(5, 81), 0, 0, rat(2, 5103)}), "E4 image");
  require(o, f.e6.truncated(6) == coeffs(Variable::s, {-8, 0, 0, rat(-28, 27), 0, 0, rat(-7, 405)}), "E6 image");
  return o;
}

Outcome onepoint_tower() {
  Outcome o;
  const int z_order = 14, q_order = 24;
  const ZLaurent inv = one_over_theta(z_order);
  const WeierstrassTable b = b_table(z_order);
  const CayleyFrame frame = cayley_frame(q_order);
  const QMPolynomial x = QMPolynomial::C2(), y = QMPolynomial::E4() * rat(1, 24), z = QMPolynomial::E6() * rat(-1, 108);
  for (int g = 1; g <= 7; ++g) {
    const std::string tag = "genus " + std::to_string(g);
    const QMPolynomial c = inv.coefficient(2 * g - 1);
    const int margin = q_order - static_cast<int>(weight_basis(2 * g).size());
    require(o, quasimodularize(qm_eval(c, q_order), 2 * g, margin) == c, tag + ": quasimodularize");
    QMPolynomial formula;
    Rational lfact = 1;
    for (int l = 0; l <= g; ++l) {
      if (l > 0) lfact *= l;
      for (int m = 0; l + 2 * m <= g; ++m) {
        const int rest = g - l - 2 * m;
        if (rest % 3 != 0) continue;
        const int n = rest / 3;
        formula += pow(x, static_cast<unsigned>(l)) * pow(y, static_cast<unsigned>(m)) * pow(z, static_cast<unsigned>(n)) *
                   (b.at(m, n) / lfact);
      }
    }
    require(o, formula == c, tag + ": b-table formula");
    const PowerSeries lhs = cayley_transform(c, frame), rhs = fjrw_onepoint_all_genus(g, frame);
    const int d = std::min(lhs.order(), rhs.order());
    require(o, lhs.truncated(d) == rhs.truncated(d), tag + ": Cayley transform");
  }
  return o;
}

Outcome two_point() {
  Outcome o;
  const std::vector<int> legs = {0, 0};
  const QMPolynomial connected = connected_from_disconnected(legs, disconnected_table(legs));
  require(o, connected == ramanujan_derive(QMPolynomial::C2()), "divisor equation");
  require(o, connected == (QMPolynomial::E4() - pow(QMPolynomial::E2(), 2)) * rat(1, 288), "explicit value");
  require(o, npoint(2, 14) == npoint_two_closed_form(14), "determinant vs closed form");
  return o;
}

Outcome hae() {
  Outcome o;
  require(o, prime_form_anomaly_check(14).passed(), "prime form anomaly");
  require(o, hae_onepoint_check(7, cayley_frame(24)).passed(), "one-point HAE");
  return o;
}

Outcome virasoro() {
  Outcome o;
  require(o, virasoro_check(3, 10).passed(), "brackets");
  require(o, quantization_check(rat(3, 5), 10, 3).passed(), "quantization");
  return o;
}

Outcome hypergeometric() {
  Outcome o;
  require(o, appendix_identity_checks(12).passed(), "q-series identities");
  const IFunction gw = i_function_gw(12);
  PowerSeries f = hyp2f1({rat(1, 3), rat(2, 3), 1}, 12);
  Rational p = 1;
  for (int n = 0; n <= 12; ++n, p *= 27) f[n] *= p;
  require(o, gw.i0 == f, "GW I0");
  PowerSeries h = hyp2f1({rat(1, 3), rat(1, 3), rat(2, 3)}, 12, Variable::t);
  p = 1;
  for (int n = 0; n <= 12; ++n, p /= 27) h[n] *= p;
  const PowerSeries fj = (substitute_power(h, 3) * PowerSeries::identity(Variable::t, 12)).truncated(12);
  require(o, i_function_fjrw(12).i0.truncated(12) == fj, "FJRW I0");
  const Report mirror = mirror_map_check(10);
  require(o, mirror.passed(), "mirror map");
  const IFunction gw10 = i_function_gw(10);
  const MirrorMapOutcome m = mirror_relation(gw10.i0, gw10.i1, 10);
  if (o.ok) o.note = m.relation;
  return o;
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("lgcy-acceptance-" + std::to_string(std::random_device{}()));
  fs::remove_all(dir);
  const std::string cli = LGCY_CLI;
  const std::vector<std::string> commands = {
      cli + " --no-cache verify all",
      cli + " --cache-dir " + dir.string() + " --format json tables b --bound 24",
      cli + " --cache-dir " + dir.string() + " --format csv tables a --bound 24",
  };
  for (const auto& cmd : commands) {
    int s1 = 0, s2 = 0;
    const std::string first = run_capture(cmd, s1), second = run_capture(cmd, s2);
    require(o, s1 == 0 && s2 == 0, "exit status of: " + cmd);
    require(o, !first.empty() && first == second, "output differs: " + cmd);
  }
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "E2 solves Chazy and the Ramanujan system to order 27", 1.0, chazy_ramanujan},
      {2, "Chazy residual of -24g equals -480 times the BP residual (20 random g)", 1.0, bp_chazy},
      {3, "FJRW genus-one series and extracted invariants", 1.0, fjrw_genus_one},
      {4, "Cayley images of E4 and E6", 1.0, cayley_frame_displays},
      {5, "one-point tower g <= 7 (quasimodular, b-table, Cayley)", 30.0, onepoint_tower},
      {6, "two-point connected value and closed form", 30.0, two_point},
      {7, "holomorphic anomaly on both sides, g <= 7", 5.0, hae},
      {8, "Virasoro brackets at L = 10 and quantization", 5.0, virasoro},
      {9, "hypergeometric identities and mirror map", 10.0, hypergeometric},
      {10, "byte-identical repeated CLI runs", 120.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > c.limit_seconds) {
      out.ok = false;
      out.note = "runtime limit exceeded";
    }
    std::ostringstream line;
    line << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed;
    line.precision(3);
    line << secs << " s, limit " << c.limit_seconds << " s)";
    if (!out.note.empty()) line << " - " << out.note;
    std::cout << line.str() << "\n";
    if (!out.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
