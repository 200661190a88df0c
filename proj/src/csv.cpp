#include "volband/csv.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "volband/errors.hpp"

namespace volband {

namespace {

[[noreturn]] void fail(const std::filesystem::path& file, std::size_t line,
                       const std::string& what) {
  throw data_error(file.string() + ":" + std::to_string(line) + ": " + what);
}

std::string strip(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

bool split_two(const std::string& line, std::string& first,
               std::string& second) {
  const std::size_t comma = line.find(',');
  if (comma == std::string::npos) return false;
  if (line.find(',', comma + 1) != std::string::npos) return false;
  first = strip(line.substr(0, comma));
  second = strip(line.substr(comma + 1));
  return true;
}

double parse_number(const std::string& cell, const std::filesystem::path& file,
                    std::size_t line) {
  if (cell.empty()) fail(file, line, "empty cell");
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(cell, &used);
  } catch (const std::exception&) {
    fail(file, line, "non-numeric cell '" + cell + "'");
  }
  if (used != cell.size()) {
    fail(file, line, "non-numeric cell '" + cell + "'");
  }
  return value;
}

// Accepts YYYY-MM-DD; the value returned is only used for ordering checks,
// actual times come from the row index.
long date_ordinal(const std::string& cell, const std::filesystem::path& file,
                  std::size_t line) {
  if (cell.size() != 10 || cell[4] != '-' || cell[7] != '-') {
    fail(file, line, "expected ISO-8601 date, got '" + cell + "'");
  }
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (!std::isdigit(static_cast<unsigned char>(cell[i]))) {
      fail(file, line, "expected ISO-8601 date, got '" + cell + "'");
    }
  }
  const long year = std::stol(cell.substr(0, 4));
  const long month = std::stol(cell.substr(5, 2));
  const long day = std::stol(cell.substr(8, 2));
  if (month < 1 || month > 12 || day < 1 || day > 31) {
    fail(file, line, "date out of range '" + cell + "'");
  }
  return (year * 12 + month) * 31 + day;
}

}  // namespace

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

ObservationRecord read_observation_csv(const std::filesystem::path& file,
                                       double horizon) {
  std::ifstream in(file);
  if (!in) throw data_error("cannot open " + file.string());

  std::string line;
  if (!std::getline(in, line)) fail(file, 1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::string first;
  std::string second;
  if (!split_two(line, first, second)) fail(file, 1, "malformed header");
  bool dated = false;
  if (first == "date" && second == "value") {
    dated = true;
  } else if (!(first == "time" && second == "value")) {
    fail(file, 1, "header must be 'time,value' or 'date,value'");
  }

  std::vector<double> raw_times;
  std::vector<double> values;
  long previous_ordinal = 0;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip(line).empty()) continue;
    if (!split_two(line, first, second)) {
      fail(file, line_number, "expected exactly two columns");
    }
    if (dated) {
      const long ordinal = date_ordinal(first, file, line_number);
      if (!raw_times.empty()) {
        if (ordinal == previous_ordinal) {
          fail(file, line_number, "duplicate date '" + first + "'");
        }
        if (ordinal < previous_ordinal) {
          fail(file, line_number, "dates must increase");
        }
      }
      previous_ordinal = ordinal;
      raw_times.push_back(static_cast<double>(raw_times.size()));
    } else {
      const double t = parse_number(first, file, line_number);
      if (!raw_times.empty()) {
        if (t == raw_times.back()) {
          fail(file, line_number, "duplicate time " + first);
        }
        if (t < raw_times.back()) {
          fail(file, line_number, "times must increase");
        }
      }
      raw_times.push_back(t);
    }
    values.push_back(parse_number(second, file, line_number));
  }
  if (values.size() < 3) {
    throw data_error(file.string() + ": at least 3 rows required");
  }

  // Rescale so the record spans [0, horizon] regardless of the raw units.
  const double t0 = raw_times.front();
  const double span = raw_times.back() - t0;
  std::vector<double> times(raw_times.size());
  for (std::size_t i = 0; i < raw_times.size(); ++i) {
    times[i] = horizon * ((raw_times[i] - t0) / span);
  }
  times.front() = 0.0;
  times.back() = horizon;
  return make_observation_record(std::move(times), std::move(values));
}

void write_observation_csv(const std::filesystem::path& file,
                           const ObservationRecord& obs) {
  std::ofstream out(file);
  if (!out) throw data_error("cannot write " + file.string());
  out << "time,value\n";
  for (std::size_t i = 0; i < obs.values.size(); ++i) {
    out << format_double(obs.times[i]) << ',' << format_double(obs.values[i])
        << '\n';
  }
  if (!out) throw data_error("write failed for " + file.string());
}

void write_truth_csv(const std::filesystem::path& file,
                     const std::vector<double>& times,
                     const std::vector<double>& vols) {
  if (times.size() != vols.size()) {
    throw std::invalid_argument("truth csv: length mismatch");
  }
  std::ofstream out(file);
  if (!out) throw data_error("cannot write " + file.string());
  out << "time,volatility\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    out << format_double(times[i]) << ',' << format_double(vols[i]) << '\n';
  }
  if (!out) throw data_error("write failed for " + file.string());
}

void write_band_csv(const std::filesystem::path& file,
                    const PosteriorSummary& summary) {
  std::ofstream out(file);
  if (!out) throw data_error("cannot write " + file.string());
  out << "bin_left,bin_right,s_mean,s_lo,s_hi,theta_mean,theta_lo,theta_hi\n";
  for (std::size_t k = 0; k < summary.bin_left.size(); ++k) {
    out << format_double(summary.bin_left[k]) << ','
        << format_double(summary.bin_right[k]) << ','
        << format_double(summary.vol_mean[k]) << ','
        << format_double(summary.vol_lower[k]) << ','
        << format_double(summary.vol_upper[k]) << ','
        << format_double(summary.var_mean[k]) << ','
        << format_double(summary.var_lower[k]) << ','
        << format_double(summary.var_upper[k]) << '\n';
  }
  if (!out) throw data_error("write failed for " + file.string());
}

void write_alpha_trace_csv(const std::filesystem::path& file,
                           const std::vector<std::vector<double>>& traces) {
  std::ofstream out(file);
  if (!out) throw data_error("cannot write " + file.string());
  out << "chain,iter,alpha\n";
  for (std::size_t c = 0; c < traces.size(); ++c) {
    for (std::size_t i = 0; i < traces[c].size(); ++i) {
      out << c << ',' << i << ',' << format_double(traces[c][i]) << '\n';
    }
  }
  if (!out) throw data_error("write failed for " + file.string());
}

std::string file_digest(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw data_error("cannot open " + file.string());
  std::uint64_t hash = 0xcbf29ce484222325ull;
  char chunk[4096];
  while (in.read(chunk, sizeof chunk) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(chunk[i]);
      hash *= 0x100000001b3ull;
    }
    if (!in) break;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace volband
