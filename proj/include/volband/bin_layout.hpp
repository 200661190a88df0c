#pragma once

#include <cstddef>
#include <vector>

namespace volband {

/// Partition of [0, horizon] into bin_count bins spanning per_bin
/// observation intervals each; the last bin absorbs the remainder, so it
/// spans per_bin + remainder intervals. Bins are right-open except the
/// last, which is closed at horizon.
struct BinLayout {
  std::size_t increment_count = 0;  // n
  std::size_t per_bin = 0;          // observation intervals per bin
  std::size_t bin_count = 0;
  std::size_t remainder = 0;
  double horizon = 0.0;
  std::vector<double> edges;  // bin_count + 1 values, edges[0]=0, back()=horizon

  /// Observation intervals covered by bin k (per_bin, or per_bin+remainder
  /// for the last bin).
  std::size_t increments_in_bin(std::size_t k) const {
    return k + 1 == bin_count ? per_bin + remainder : per_bin;
  }
};

/// Builds the partition from the intervals-per-bin choice.
/// Requires 1 <= per_bin < increment_count and horizon > 0.
BinLayout build_bin_layout(std::size_t increment_count, double horizon,
                           std::size_t per_bin);

/// Builds the partition from a requested bin count: per_bin is set to
/// floor(n / bin_count) and the bin count re-derived as floor(n / per_bin),
/// so the actual count can exceed the request when n is not divisible.
BinLayout build_layout_with_bin_count(std::size_t increment_count,
                                      double horizon, std::size_t bin_count);

/// Bin containing time t in [0, horizon]; right-open bins, last bin closed.
std::size_t bin_index(const BinLayout& layout, double t);

/// Bin containing observation increment i (0-based, i in [0, n)).
std::size_t bin_of_increment(const BinLayout& layout, std::size_t i);

}  // namespace volband
