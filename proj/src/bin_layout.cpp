#include "volband/bin_layout.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace volband {

BinLayout build_bin_layout(std::size_t increment_count, double horizon,
                           std::size_t per_bin) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("bin layout: horizon must be positive");
  }
  if (per_bin < 1 || per_bin >= increment_count) {
    throw std::invalid_argument(
        "bin layout: need 1 <= intervals-per-bin < increment count");
  }

  BinLayout layout;
  layout.increment_count = increment_count;
  layout.per_bin = per_bin;
  layout.bin_count = increment_count / per_bin;
  layout.remainder = increment_count - per_bin * layout.bin_count;
  layout.horizon = horizon;
  layout.edges.resize(layout.bin_count + 1);
  for (std::size_t k = 0; k < layout.bin_count; ++k) {
    layout.edges[k] = horizon * (static_cast<double>(k * per_bin) /
                                 static_cast<double>(increment_count));
  }
  layout.edges[layout.bin_count] = horizon;
  return layout;
}

BinLayout build_layout_with_bin_count(std::size_t increment_count,
                                      double horizon, std::size_t bin_count) {
  if (bin_count < 1 || bin_count > increment_count) {
    throw std::invalid_argument("bin layout: bin count out of range");
  }
  const std::size_t per_bin = increment_count / bin_count;
  if (per_bin >= increment_count) {
    throw std::invalid_argument("bin layout: bin count yields a single bin "
                                "spanning all increments");
  }
  return build_bin_layout(increment_count, horizon, per_bin);
}

std::size_t bin_index(const BinLayout& layout, double t) {
  if (!(t >= 0.0) || !(t <= layout.horizon)) {
    throw std::invalid_argument("bin index: time outside [0, horizon]");
  }
  // Right-open bins; the last bin is closed at the horizon.
  auto it = std::upper_bound(layout.edges.begin(), layout.edges.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - layout.edges.begin());
  if (k == 0) return 0;  // t == 0 with edges[0] == 0
  return std::min(k - 1, layout.bin_count - 1);
}

std::size_t bin_of_increment(const BinLayout& layout, std::size_t i) {
  if (i >= layout.increment_count) {
    throw std::invalid_argument("bin of increment: index out of range");
  }
  return std::min(i / layout.per_bin, layout.bin_count - 1);
}

}  // namespace volband
