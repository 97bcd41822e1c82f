#pragma once

#include "lgcy/report.hpp"

#include <string>
#include <vector>

namespace lgcy {

struct RunConfig {
  int q_order = 24;
  int s_order = 24;
  /// Weight bound for z-expansions; one-point functions up to genus z_order / 2.
  int z_order = 14;
  int margin = 10;
  int virasoro_index = 10;
};

/// ramanujan, chazy, bp, prime-form, weights, hae, virasoro, mirror.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Exceptions inside a check become failures.
/// Throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const RunConfig& config);

}  // namespace lgcy
