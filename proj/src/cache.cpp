#include "lgcy/cache.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace lgcy {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Json stamp(const std::string& operation, const Json& params) {
  return {{"version", kCacheFormatVersion}, {"code_version", kCodeVersion}, {"operation", operation}, {"params", params}};
}

}  // namespace

std::optional<std::filesystem::path> Cache::default_directory() {
  if (const char* env = std::getenv("CACHE_DIR"); env && *env) return std::filesystem::path(env);
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "lgcy";
  return std::nullopt;
}

std::string Cache::file_name(const std::string& operation, const Json& params) const {
  std::ostringstream os;
  os << operation << '-' << std::hex << fnv1a(stamp(operation, params).dump()) << ".json";
  return os.str();
}

std::optional<Json> Cache::load(const std::string& operation, const Json& params) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(*dir_ / file_name(operation, params));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    const Json expected = stamp(operation, params);
    for (const auto& [k, v] : expected.items())
      if (!j.contains(k) || j[k] != v) return std::nullopt;
    if (!j.contains("payload")) return std::nullopt;
    return j["payload"];
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

bool Cache::store(const std::string& operation, const Json& params, const Json& payload) const {
  if (!dir_) return false;
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  if (ec) return false;
  Json j = stamp(operation, params);
  j["payload"] = payload;
  const auto target = *dir_ / file_name(operation, params);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) return false;
    out << j.dump() << '\n';
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return false;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (!ec) return true;
  std::filesystem::remove(tmp, ec);
  return false;
}

}  // namespace lgcy
