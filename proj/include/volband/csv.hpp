#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "volband/observation.hpp"
#include "volband/summary.hpp"

namespace volband {

/// Formats a double with enough digits to round-trip exactly ("%.17g").
std::string format_double(double x);

/// Reads a two-column CSV with header "time,value" or "date,value".
/// Numeric times are rescaled to [0, horizon]; ISO-8601 dates are mapped
/// to equidistant indices on [0, horizon]. Throws data_error on ragged
/// rows, non-numeric cells, duplicate or non-monotone times.
ObservationRecord read_observation_csv(const std::filesystem::path& file,
                                       double horizon = 1.0);

/// Writes "time,value" rows at full precision.
void write_observation_csv(const std::filesystem::path& file,
                           const ObservationRecord& obs);

/// Writes "time,volatility" rows at full precision.
void write_truth_csv(const std::filesystem::path& file,
                     const std::vector<double>& times,
                     const std::vector<double>& vols);

/// Writes the band CSV:
/// bin_left,bin_right,s_mean,s_lo,s_hi,theta_mean,theta_lo,theta_hi.
void write_band_csv(const std::filesystem::path& file,
                    const PosteriorSummary& summary);

/// Writes "chain,iter,alpha" rows for one trace per chain.
void write_alpha_trace_csv(const std::filesystem::path& file,
                           const std::vector<std::vector<double>>& traces);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex characters.
std::string file_digest(const std::filesystem::path& file);

}  // namespace volband
