#include "volband/likelihood.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace volband {

double log_pseudo_likelihood(std::span<const double> theta,
                             const IncrementSet& inc, const BinLayout& layout) {
  if (theta.size() != layout.bin_count ||
      inc.squared_bin_sums.size() != layout.bin_count ||
      inc.increments.size() != layout.increment_count) {
    throw std::invalid_argument("log pseudo-likelihood: dimension mismatch");
  }
  for (double t : theta) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw std::invalid_argument(
          "log pseudo-likelihood: theta entries must be positive and finite");
    }
  }

  const double n = static_cast<double>(layout.increment_count);
  const double horizon = layout.horizon;
  // Increment i in bin k has variance theta[k] * horizon / n; grouping the
  // Gaussian log densities by bin gives the sum below plus a theta-free
  // constant.
  double sum = -0.5 * n * std::log(2.0 * std::numbers::pi * horizon / n);
  const double data_rate = n / (2.0 * horizon);
  for (std::size_t k = 0; k < layout.bin_count; ++k) {
    const double count = static_cast<double>(layout.increments_in_bin(k));
    sum -= 0.5 * count * std::log(theta[k]);
    sum -= data_rate * inc.squared_bin_sums[k] / theta[k];
  }
  return sum;
}

}  // namespace volband
