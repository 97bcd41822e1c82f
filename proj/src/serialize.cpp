#include "lgcy/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace lgcy {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw std::invalid_argument("unknown format: " + name);
}

Json to_json(const Rational& r) { return to_fraction_string(r); }

Json to_json(const QMPolynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"a", m.e2}, {"b", m.e4}, {"c", m.e6}, {"coeff", to_fraction_string(c)}});
  return out;
}

Json to_json(const PowerSeries& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_fraction_string(c));
  return {{"variable", variable_name(p.variable())}, {"order", p.order()}, {"coefficients", coeffs}};
}

Json to_json(const MultiZPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"value", to_json(c)}});
  return {{"legs", p.legs()}, {"weight_bound", p.weight_bound()}, {"terms", terms}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json j = {{"name", c.name}, {"anchor", c.anchor}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.first_failure) j["first_failure"] = *c.first_failure;
    checks.push_back(std::move(j));
  }
  return {{"suite", r.suite()}, {"passed", r.passed()}, {"failures", r.failures()}, {"checks", checks}};
}

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

QMPolynomial qm_from_json(const Json& j) {
  QMPolynomial p;
  for (const auto& t : j)
    p.add_term({t.at("a").get<int>(), t.at("b").get<int>(), t.at("c").get<int>()}, rational_from_json(t.at("coeff")));
  return p;
}

namespace {

Variable variable_from_name(const std::string& name) {
  for (Variable v : {Variable::q, Variable::s, Variable::t, Variable::x, Variable::z})
    if (name == variable_name(v)) return v;
  throw std::invalid_argument("unknown series variable: " + name);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

PowerSeries series_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& v : j.at("coefficients")) c.push_back(rational_from_json(v));
  if (static_cast<int>(c.size()) != j.at("order").get<int>() + 1) throw std::invalid_argument("series order mismatch");
  return PowerSeries(variable_from_name(j.at("variable").get<std::string>()), std::move(c));
}

MultiZPoly multiz_from_json(const Json& j) {
  MultiZPoly p(j.at("legs").get<int>(), j.at("weight_bound").get<int>());
  for (const auto& t : j.at("terms")) p.add(t.at("exponents").get<std::vector<int>>(), qm_from_json(t.at("value")));
  return p;
}

std::string render(const std::vector<InvariantRecord>& records, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json out = Json::array();
      for (const auto& r : records)
        out.push_back({{"theory", r.theory},
                       {"genus", r.genus},
                       {"insertions", r.insertions},
                       {"representation", r.representation},
                       {"payload", r.payload}});
      os << Json{{"version", kOutputFormatVersion}, {"records", out}}.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      // one monomial or coefficient per row
      os << "theory,genus,insertions,representation,key,value\n";
      for (const auto& r : records) {
        const std::string head = r.theory + ',' + std::to_string(r.genus) + ',' + csv_escape(r.insertions) + ',' +
                                 r.representation + ',';
        if (r.representation == "qm_polynomial") {
          for (const auto& t : r.payload)
            os << head << "E2^" << t["a"].get<int>() << " E4^" << t["b"].get<int>() << " E6^" << t["c"].get<int>()
               << ',' << t["coeff"].get<std::string>() << '\n';
        } else if (r.payload.is_object() && r.payload.contains("coefficients")) {
          const std::string var = r.payload["variable"].get<std::string>();
          int n = 0;
          for (const auto& c : r.payload["coefficients"]) os << head << var << '^' << n++ << ',' << c.get<std::string>() << '\n';
        } else {
          os << head << ',' << (r.payload.is_string() ? r.payload.get<std::string>() : r.payload.dump()) << '\n';
        }
      }
      break;
    }
    case Format::text:
      for (const auto& r : records)
        os << r.theory << " g=" << r.genus << " <" << r.insertions << "> = " << r.text << '\n';
      break;
  }
  return os.str();
}

std::string render(const Report& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json:
      os << Json{{"version", kOutputFormatVersion}, {"report", to_json(report)}}.dump(2) << '\n';
      break;
    case Format::csv:
      os << "suite,name,anchor,passed,first_failure,detail\n";
      for (const auto& c : report.checks())
        os << report.suite() << ',' << csv_escape(c.name) << ',' << csv_escape(c.anchor) << ','
           << (c.passed ? "true" : "false") << ',' << (c.first_failure ? std::to_string(*c.first_failure) : "") << ','
           << csv_escape(c.detail) << '\n';
      break;
    case Format::text:
      for (const auto& c : report.checks()) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.anchor << ']';
        if (c.first_failure) os << "  first failing coefficient: " << *c.first_failure;
        if (!c.detail.empty()) os << "  (" << c.detail << ')';
        os << '\n';
      }
      os << report.suite() << ": " << (report.checks().size() - report.failures()) << '/' << report.checks().size()
         << " passed\n";
      break;
  }
  return os.str();
}

}  // namespace lgcy
