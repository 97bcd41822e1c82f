#include "lgcy/bloch_okounkov.hpp"
#include "lgcy/cache.hpp"
#include "lgcy/cayley_fjrw.hpp"
#include "lgcy/chazy.hpp"
#include "lgcy/modular_forms.hpp"
#include "lgcy/serialize.hpp"
#include "lgcy/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace lgcy;

constexpr int kExitFailedCheck = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOrder = 3;

struct Options {
  int q_order = 24;
  int z_order = 14;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
};

Cache make_cache(const Options& o) {
  if (o.no_cache) return Cache();
  if (!o.cache_dir.empty()) return Cache(o.cache_dir);
  if (auto d = Cache::default_directory()) return Cache(*d);
  return Cache();
}

void require_weight(int weight, int z_order) {
  if (weight > z_order)
    throw InsufficientOrder("--z-order " + std::to_string(z_order) + " is too small; minimal order is " +
                                std::to_string(weight),
                            weight);
}

std::string insertion_list(const std::string& label, const std::vector<int>& psi) {
  std::ostringstream os;
  for (std::size_t i = 0; i < psi.size(); ++i) os << (i ? ", " : "") << label << " psi^" << psi[i];
  return os.str();
}

int genus_of(const std::vector<int>& psi) {
  int sum = 0;
  for (int l : psi) sum += l;
  if (sum % 2 != 0) throw std::invalid_argument("the sum of psi powers must be even");
  return sum / 2 + 1;
}

MultiZPoly cached_npoint(const Cache& cache, int legs, int weight) {
  const Json params = {{"legs", legs}, {"weight_bound", weight}};
  if (auto hit = cache.load("npoint", params)) {
    try {
      return multiz_from_json(*hit);
    } catch (const std::exception&) {
    }
  }
  MultiZPoly table = npoint(legs, weight);
  cache.store("npoint", params, to_json(table));
  return table;
}

InvariantRecord qm_record(const std::string& insertions, int genus, const QMPolynomial& p) {
  return {"gw_curve", genus, insertions, "qm_polynomial", to_json(p), p.to_string()};
}

InvariantRecord q_record(const std::string& insertions, int genus, const QMPolynomial& p, int order) {
  const PowerSeries s = qm_eval(p, order);
  return {"gw_curve", genus, insertions, "q_series", to_json(s), s.to_string()};
}

std::string render_table(const std::string& name, const WeierstrassTable& t, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      Json entries = Json::array();
      for (const auto& [mn, v] : t.entries())
        entries.push_back({{"m", mn.first}, {"n", mn.second}, {"value", to_fraction_string(v)}});
      os << Json{{"version", kOutputFormatVersion}, {"table", name}, {"bound", t.bound()}, {"entries", entries}}.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "table,m,n,value\n";
      for (const auto& [mn, v] : t.entries()) os << name << ',' << mn.first << ',' << mn.second << ',' << to_fraction_string(v) << '\n';
      break;
    case Format::text:
      for (const auto& [mn, v] : t.entries())
        os << name << "_{" << mn.first << ',' << mn.second << "} = " << to_string(v) << '\n';
      break;
  }
  return os.str();
}

WeierstrassTable table_from_json(const Json& j) {
  WeierstrassTable t(j.at("bound").get<int>());
  for (const auto& e : j.at("entries")) t.set(e.at("m").get<int>(), e.at("n").get<int>(), rational_from_json(e.at("value")));
  return t;
}

Json table_to_json(const WeierstrassTable& t) {
  Json entries = Json::array();
  for (const auto& [mn, v] : t.entries()) entries.push_back({{"m", mn.first}, {"n", mn.second}, {"value", to_fraction_string(v)}});
  return {{"bound", t.bound()}, {"entries", entries}};
}

std::string render_series(const std::vector<std::pair<std::string, PowerSeries>>& list, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      Json out = Json::array();
      for (const auto& [name, s] : list) out.push_back({{"name", name}, {"series", to_json(s)}});
      os << Json{{"version", kOutputFormatVersion}, {"series", out}}.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "name,n,coefficient\n";
      for (const auto& [name, s] : list)
        for (int n = 0; n <= s.order(); ++n) os << name << ',' << n << ',' << to_fraction_string(s[n]) << '\n';
      break;
    case Format::text:
      for (const auto& [name, s] : list) os << name << " = " << s.to_string() << '\n';
      break;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stationary Gromov-Witten and FJRW correlation functions of the elliptic curve and the Fermat cubic"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--order", opt.q_order, "q-series truncation order")->check(CLI::Range(1, 1000));
  app.add_option("--z-order", opt.z_order, "weight bound for z-expansions")->check(CLI::Range(0, 200));
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", opt.cache_dir, "cache directory (overrides CACHE_DIR)");
  app.add_flag("--no-cache", opt.no_cache, "do not read or write the cache");

  auto* gw = app.add_subcommand("gw", "stationary GW correlation functions of the elliptic curve")->require_subcommand(1);
  gw->fallthrough();
  std::optional<int> gw_genus;
  std::optional<int> gw_psi;
  bool gw_q_series = false;
  auto* gw_one = gw->add_subcommand("onepoint", "<<omega psi^k>>_g");
  gw_one->fallthrough();
  gw_one->add_option("--genus", gw_genus, "genus g >= 0 (psi = 2g - 2)");
  gw_one->add_option("--psi", gw_psi, "psi power k >= -2");
  gw_one->add_flag("--q-series", gw_q_series, "also print the q-expansion");
  int np_legs = 0;
  std::vector<int> np_psi;
  bool np_connected = false;
  auto* gw_np = gw->add_subcommand("npoint", "<<omega psi^l_1, ..., omega psi^l_N>>");
  gw_np->fallthrough();
  gw_np->add_option("--legs", np_legs, "number of insertions (1..4)")->required();
  gw_np->add_option("--psi", np_psi, "comma-separated psi powers")->required()->delimiter(',');
  gw_np->add_flag("--connected", np_connected, "connected instead of disconnected");
  gw_np->add_flag("--q-series", gw_q_series, "also print the q-expansion");

  auto* fjrw = app.add_subcommand("fjrw", "FJRW invariants of the Fermat cubic")->require_subcommand(1);
  fjrw->fallthrough();
  int inv_max = 12;
  auto* fj_inv = fjrw->add_subcommand("invariants", "genus-one invariants Theta_{1,n}");
  fj_inv->fallthrough();
  fj_inv->add_option("--max", inv_max, "largest n")->check(CLI::Range(1, 500));
  int fj_genus = 1;
  std::optional<int> fj_order;
  auto* fj_one = fjrw->add_subcommand("onepoint", "<<phi psi^{2g-2}>>_g(s)");
  fj_one->fallthrough();
  fj_one->add_option("--genus", fj_genus, "genus g >= 1")->required()->check(CLI::Range(1, 100));
  fj_one->add_option("--order", fj_order, "s-series order (default: --order)")->check(CLI::Range(0, 1000));
  std::vector<int> fc_psi;
  auto* fj_corr = fjrw->add_subcommand("correlation", "connected <<phi psi^l_1, ..., phi psi^l_N>>(s)");
  fj_corr->fallthrough();
  fj_corr->add_option("--psi", fc_psi, "comma-separated psi powers")->required()->delimiter(',');

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->fallthrough();
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.insert(suite_choices.begin(), "all");
  verify->add_option("suite", suite, "suite name")->check(CLI::IsMember(suite_choices));

  std::string table = "a";
  int bound = 24;
  auto* tables = app.add_subcommand("tables", "dump a_{m,n}, b_{m,n} or Eisenstein series");
  tables->fallthrough();
  tables->add_option("table", table, "a, b or eisenstein")->required()->check(CLI::IsMember({"a", "b", "eisenstein"}));
  tables->add_option("--bound", bound, "weight bound 4m + 6n <= bound")->check(CLI::Range(0, 400));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    const Format format = parse_format(opt.format);
    const Cache cache = make_cache(opt);
    std::vector<InvariantRecord> records;

    if (gw_one->parsed()) {
      if (!gw_genus && !gw_psi) throw std::invalid_argument("give --genus or --psi");
      const int psi = gw_psi ? *gw_psi : 2 * *gw_genus - 2;
      if (gw_genus && gw_psi && *gw_psi != 2 * *gw_genus - 2)
        throw std::invalid_argument("--genus and --psi disagree: psi must be 2g - 2");
      if (psi < -2) throw std::invalid_argument("psi power must be >= -2");
      const std::vector<int> legs{psi};
      const int genus = genus_of(legs);
      require_weight(psi + 2, opt.z_order);
      const QMPolynomial p = one_over_theta(opt.z_order).coefficient(psi + 1);
      const std::string ins = insertion_list("omega", legs);
      records.push_back(qm_record(ins, genus, p));
      if (gw_q_series) records.push_back(q_record(ins, genus, p, opt.q_order));
    } else if (gw_np->parsed()) {
      if (np_legs < 1 || np_legs > kMaxLegs) throw std::invalid_argument("--legs must be between 1 and 4");
      if (static_cast<int>(np_psi.size()) != np_legs) throw std::invalid_argument("--psi must list one power per leg");
      for (int l : np_psi)
        if (l < -2 || (np_connected && l < 0)) throw std::invalid_argument("psi powers must be >= -2 (>= 0 when connected)");
      const int genus = genus_of(np_psi);
      int weight = 0;
      for (int l : np_psi) weight += l + 2;
      require_weight(weight, opt.z_order);
      QMPolynomial p;
      if (np_connected) {
        DisconnectedTable table_all;
        for (unsigned mask = 1; mask < (1u << np_legs); ++mask) {
          std::vector<int> sub;
          for (int i = 0; i < np_legs; ++i)
            if (mask & (1u << i)) sub.push_back(np_psi[static_cast<std::size_t>(i)]);
          std::sort(sub.begin(), sub.end());
          if (table_all.contains(sub)) continue;
          table_all.emplace(sub, stationary_invariant(cached_npoint(cache, static_cast<int>(sub.size()), weight), sub));
        }
        p = connected_from_disconnected(np_psi, table_all);
      } else {
        p = stationary_invariant(cached_npoint(cache, np_legs, weight), np_psi);
      }
      const std::string ins = insertion_list("omega", np_psi) + (np_connected ? " (connected)" : " (disconnected)");
      records.push_back(qm_record(ins, genus, p));
      if (gw_q_series) records.push_back(q_record(ins, genus, p, opt.q_order));
    } else if (fj_inv->parsed()) {
      const PowerSeries f = fjrw_genus1_series(std::max(inv_max - 1, 2));
      for (const auto& [n, v] : extract_fjrw_invariants(f, 1)) {
        if (n > inv_max) break;
        records.push_back({"fjrw_cubic", 1, "phi^" + std::to_string(n), "rational", to_json(v), to_string(v)});
      }
    } else if (fj_one->parsed()) {
      const int order = fj_order.value_or(opt.q_order);
      const CayleyFrame frame = cayley_frame(std::max(order + 2, 3));
      const PowerSeries s = fjrw_onepoint_all_genus(fj_genus, frame).truncated(order);
      records.push_back({"fjrw_cubic", fj_genus, "phi psi^" + std::to_string(2 * fj_genus - 2), "s_series", to_json(s),
                         s.to_string()});
    } else if (fj_corr->parsed()) {
      std::vector<FjrwInsertion> ins;
      for (int l : fc_psi) ins.push_back({FjrwLabel::phi, l});
      const int genus = fjrw_genus(ins);
      const CayleyFrame frame = cayley_frame(std::max(opt.q_order + 2, 3));
      const PowerSeries s = fjrw_correlation(ins, frame).truncated(opt.q_order);
      records.push_back({"fjrw_cubic", genus, insertion_list("phi", fc_psi), "s_series", to_json(s), s.to_string()});
    } else if (verify->parsed()) {
      RunConfig cfg;
      cfg.q_order = opt.q_order;
      cfg.s_order = opt.q_order;
      cfg.z_order = opt.z_order;
      const Report report = run_suite(suite, cfg);
      std::cout << render(report, format);
      return report.passed() ? 0 : kExitFailedCheck;
    } else if (tables->parsed()) {
      if (table == "eisenstein") {
        std::vector<std::pair<std::string, PowerSeries>> list;
        for (int k : {2, 4, 6}) list.emplace_back("E" + std::to_string(k), eisenstein(k, opt.q_order));
        std::cout << render_series(list, format);
        return 0;
      }
      const std::string op = table == "a" ? "weierstrass_a" : "b_table";
      const Json params = {{"bound", bound}};
      std::optional<WeierstrassTable> t;
      if (auto hit = cache.load(op, params)) {
        try {
          t = table_from_json(*hit);
        } catch (const std::exception&) {
        }
      }
      if (!t) {
        t = table == "a" ? weierstrass_a(bound) : b_table(bound);
        cache.store(op, params, table_to_json(*t));
      }
      std::cout << render_table(table, *t, format);
      return 0;
    }
    std::cout << render(records, format);
    return 0;
  } catch (const InsufficientOrder& e) {
    std::cerr << "insufficient order: " << e.what() << '\n';
    return kExitOrder;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailedCheck;
  }
}
