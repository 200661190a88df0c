#include "volband/inverse_gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace volband {

double sample_inverse_gamma(double shape, double scale, Rng& rng) {
  if (!(shape > 0.0) || !std::isfinite(shape) || !(scale > 0.0) ||
      !std::isfinite(scale)) {
    throw std::invalid_argument(
        "inverse gamma: shape and scale must be positive and finite");
  }
  for (;;) {
    const double g = rng.gamma(shape);
    const double draw = scale / g;
    // A gamma draw that underflows to 0 would map to infinity; redraw.
    if (std::isfinite(draw) && draw > 0.0) return draw;
  }
}

double inverse_gamma_log_density(double x, double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw std::invalid_argument(
        "inverse gamma density: parameters must be positive");
  }
  if (!(x > 0.0)) {
    throw std::invalid_argument("inverse gamma density: x must be positive");
  }
  return shape * std::log(scale) - std::lgamma(shape) -
         (shape + 1.0) * std::log(x) - scale / x;
}

}  // namespace volband
