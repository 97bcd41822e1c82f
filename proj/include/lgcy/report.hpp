#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lgcy {

struct CheckResult {
  std::string name;
  /// Mathematical statement the check verifies.
  std::string anchor;
  bool passed = false;
  std::string detail;
  /// First coefficient index at which a series identity failed.
  std::optional<int> first_failure;
};

class Report {
 public:
  explicit Report(std::string suite = {}) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool passed() const;
  std::size_t failures() const;

  void add(CheckResult check) { checks_.push_back(std::move(check)); }
  void add(const std::string& name, const std::string& anchor, bool passed, const std::string& detail = {},
           std::optional<int> first_failure = std::nullopt);
  /// Append every check of another report.
  void merge(const Report& other);

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

}  // namespace lgcy
