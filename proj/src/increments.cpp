#include "volband/increments.hpp"

#include <stdexcept>
#include <utility>

namespace volband {

IncrementSet bin_increments(std::vector<double> increments,
                            const BinLayout& layout) {
  if (increments.size() != layout.increment_count) {
    throw std::invalid_argument(
        "increments: count does not match the bin layout");
  }
  IncrementSet set;
  set.increments = std::move(increments);
  set.squared_bin_sums.assign(layout.bin_count, 0.0);
  std::size_t i = 0;
  for (std::size_t k = 0; k < layout.bin_count; ++k) {
    const std::size_t count = layout.increments_in_bin(k);
    for (std::size_t j = 0; j < count; ++j, ++i) {
      set.squared_bin_sums[k] += set.increments[i] * set.increments[i];
    }
  }
  return set;
}

IncrementSet compute_increments_and_sums(const ObservationRecord& obs,
                                         const BinLayout& layout) {
  std::vector<double> increments(obs.increment_count());
  for (std::size_t i = 0; i < increments.size(); ++i) {
    increments[i] = obs.values[i + 1] - obs.values[i];
  }
  return bin_increments(std::move(increments), layout);
}

}  // namespace volband
