#include "lgcy/report.hpp"

#include <algorithm>

namespace lgcy {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) { return !c.passed; }));
}

void Report::add(const std::string& name, const std::string& anchor, bool passed, const std::string& detail,
                 std::optional<int> first_failure) {
  checks_.push_back({name, anchor, passed, detail, first_failure});
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

}  // namespace lgcy
