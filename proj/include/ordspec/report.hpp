#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "ordspec/hash.hpp"
#include "ordspec/numtheory.hpp"
#include "ordspec/version.hpp"

namespace ordspec {

using ordered_json = nlohmann::ordered_json;

// Doubles hold integers exactly below 2^53; anything at or above it is
// serialized as a decimal string so JSON consumers cannot silently round.
inline constexpr std::uint64_t kJsonExactLimit = std::uint64_t{1} << 53;

inline ordered_json json_number(std::uint64_t v) {
  if (v < kJsonExactLimit) return v;
  return std::to_string(v);
}

inline ordered_json json_number(unsigned __int128 v) {
  if (v < kJsonExactLimit) return static_cast<std::uint64_t>(v);
  return to_decimal_string(v);
}

inline ordered_json make_envelope(std::string command, ordered_json parameters,
                                  ordered_json result) {
  ordered_json env;
  env["schema"] = 1;
  env["command"] = std::move(command);
  env["parameters"] = std::move(parameters);
  env["result"] = std::move(result);
  env["toolkit_version"] = kToolkitVersion;
  env["deterministic_seed"] = kDeterministicSeed;
  return env;
}

inline std::string render_report(const ordered_json& envelope) { return envelope.dump(2) + "\n"; }

// Content-addressed report cache: key = digest of command plus the
// result-determining parameters, value = the rendered envelope.  Reports are
// deterministic, so a hit and a fresh computation are byte-identical.
class ReportCache {
 public:
  ReportCache() = default;
  explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {}

  bool enabled() const { return enabled_; }

  static std::string key(const std::string& command, const ordered_json& parameters) {
    const std::string blob = command + '\x1f' + parameters.dump();
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(detail::fnv1a(blob)));
    return hex;
  }

  std::optional<std::string> load(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string payload = buf.str();
    const ordered_json parsed = ordered_json::parse(payload, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("schema") || parsed["schema"] != 1)
      return std::nullopt;  // corrupt entry: treat as a miss, recompute
    return payload;
  }

  void store(const std::string& key, const std::string& payload) const {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw std::runtime_error("cache: cannot create " + dir_.string());
    const std::filesystem::path tmp = dir_ / (key + ".json.tmp");
    const std::filesystem::path final_path = dir_ / (key + ".json");
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out || !(out << payload) || !out.flush())
        throw std::runtime_error("cache: cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) throw std::runtime_error("cache: cannot publish " + final_path.string());
  }

 private:
  std::filesystem::path dir_;
  bool enabled_ = false;
};

}  // namespace ordspec
