#pragma once

#include <cstddef>
#include <vector>

namespace volband {

/// A discretely observed path on [0, horizon]: values[i] observed at
/// times[i], with times strictly increasing from 0 to horizon.
struct ObservationRecord {
  std::vector<double> times;
  std::vector<double> values;
  double horizon = 0.0;
  /// True when times[i] = i*horizon/n within relative tolerance 1e-9.
  bool equidistant = false;

  std::size_t increment_count() const { return values.size() - 1; }
};

/// Validates and assembles a record. Requires at least 3 points (n >= 2),
/// times strictly increasing, times.front() == 0, positive horizon.
/// Throws volband::data_error on violation.
ObservationRecord make_observation_record(std::vector<double> times,
                                          std::vector<double> values);

}  // namespace volband
