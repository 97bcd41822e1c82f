#pragma once

#include "lgcy/bloch_okounkov.hpp"
#include "lgcy/power_series.hpp"
#include "lgcy/qm_polynomial.hpp"
#include "lgcy/report.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lgcy {

using Json = nlohmann::ordered_json;

/// Value of the mandatory "version" field of every JSON document written.
inline constexpr int kOutputFormatVersion = 1;

enum class Format { json, csv, text };

/// "json", "csv" or "text"; throws std::invalid_argument.
Format parse_format(const std::string& name);

Json to_json(const Rational& r);
Json to_json(const QMPolynomial& p);
Json to_json(const PowerSeries& p);
Json to_json(const MultiZPoly& p);
Json to_json(const Report& r);

Rational rational_from_json(const Json& j);
QMPolynomial qm_from_json(const Json& j);
PowerSeries series_from_json(const Json& j);
MultiZPoly multiz_from_json(const Json& j);

/// One computed invariant or correlation function.
struct InvariantRecord {
  std::string theory;          // gw_curve or fjrw_cubic
  int genus = 0;
  std::string insertions;      // e.g. "omega psi^0, omega psi^0"
  std::string representation;  // qm_polynomial, q_series, s_series, rational
  Json payload;
  /// Human-readable payload for text output.
  std::string text;
};

/// Stable output in the requested format, newline terminated.
std::string render(const std::vector<InvariantRecord>& records, Format format);
std::string render(const Report& report, Format format);

}  // namespace lgcy
