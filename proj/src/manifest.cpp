#include "volband/manifest.hpp"

#include <fstream>

#include "volband/csv.hpp"
#include "volband/errors.hpp"

namespace volband {

RunManifest::RunManifest(std::string command) {
  entries_.emplace_back("version", kVersion);
  entries_.emplace_back("command", std::move(command));
}

void RunManifest::add(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}

void RunManifest::add(const std::string& key, double value) {
  entries_.emplace_back(key, format_double(value));
}

void RunManifest::add(const std::string& key, std::uint64_t value) {
  entries_.emplace_back(key, std::to_string(value));
}

void RunManifest::write(const std::filesystem::path& file) const {
  std::ofstream out(file);
  if (!out) throw data_error("cannot write " + file.string());
  for (const auto& [key, value] : entries_) {
    out << key << " = " << value << '\n';
  }
  if (!out) throw data_error("write failed for " + file.string());
}

}  // namespace volband
