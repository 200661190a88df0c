#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace volband {

inline constexpr const char* kVersion = "0.1.0";

/// Flat key = value record of a run: config echo, seed, input digest,
/// artifact paths, wall clock, version. Enough to re-run bit-identically.
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);
  void add(const std::string& key, std::uint64_t value);

  void write(const std::filesystem::path& file) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace volband
