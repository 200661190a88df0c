#include "volband/observation.hpp"

#include <cmath>

#include "volband/errors.hpp"

namespace volband {

ObservationRecord make_observation_record(std::vector<double> times,
                                          std::vector<double> values) {
  if (times.size() != values.size()) {
    throw data_error("observation record: times and values differ in length");
  }
  if (times.size() < 3) {
    throw data_error(
        "observation record: need at least 3 observations (n >= 2)");
  }
  if (times.front() != 0.0) {
    throw data_error("observation record: first time must be 0");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw data_error("observation record: times must be strictly increasing");
    }
  }
  for (double t : times) {
    if (!std::isfinite(t)) {
      throw data_error("observation record: non-finite time");
    }
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw data_error("observation record: non-finite value");
    }
  }

  ObservationRecord obs;
  obs.horizon = times.back();
  const std::size_t n = times.size() - 1;
  bool equidistant = true;
  for (std::size_t i = 0; i <= n; ++i) {
    const double expected =
        obs.horizon * (static_cast<double>(i) / static_cast<double>(n));
    if (std::abs(times[i] - expected) > 1e-9 * obs.horizon) {
      equidistant = false;
      break;
    }
  }
  obs.equidistant = equidistant;
  obs.times = std::move(times);
  obs.values = std::move(values);
  return obs;
}

}  // namespace volband
