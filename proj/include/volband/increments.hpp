#pragma once

#include <vector>

#include "volband/bin_layout.hpp"
#include "volband/observation.hpp"

namespace volband {

/// Observation increments and their per-bin sums of squares.
struct IncrementSet {
  std::vector<double> increments;        // values[i] - values[i-1], size n
  std::vector<double> squared_bin_sums;  // one entry per bin
};

/// Computes increments and per-bin squared sums for the given layout.
/// Requires layout.increment_count == obs.increment_count().
IncrementSet compute_increments_and_sums(const ObservationRecord& obs,
                                         const BinLayout& layout);

/// Bins precomputed increments (e.g. returns) instead of differencing a
/// series. Requires increments.size() == layout.increment_count.
IncrementSet bin_increments(std::vector<double> increments,
                            const BinLayout& layout);

}  // namespace volband
