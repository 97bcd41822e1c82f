#pragma once

#include "lgcy/serialize.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace lgcy {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCodeVersion = "lgcy-0.1.0";

/// JSON file cache keyed by (operation, parameters, code version). A disabled cache
/// never reads or writes.
class Cache {
 public:
  /// Disabled cache.
  Cache() = default;
  explicit Cache(std::filesystem::path directory) : dir_(std::move(directory)) {}

  /// CACHE_DIR if set, else $HOME/.cache/lgcy, else nullopt.
  static std::optional<std::filesystem::path> default_directory();

  bool enabled() const { return dir_.has_value(); }
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  /// File name for an entry: operation plus a 64-bit FNV-1a hash of the canonical key.
  std::string file_name(const std::string& operation, const Json& params) const;

  /// Payload of a matching entry; nullopt on miss, parse error or stamp mismatch.
  std::optional<Json> load(const std::string& operation, const Json& params) const;
  /// Write-temp-then-rename. Returns false if the directory is not writable.
  bool store(const std::string& operation, const Json& params, const Json& payload) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace lgcy
