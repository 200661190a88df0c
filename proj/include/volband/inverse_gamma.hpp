#pragma once

#include "volband/rng.hpp"

namespace volband {

/// Shape/scale pair of an inverse gamma distribution.
struct IgParams {
  double shape = 0.0;
  double scale = 0.0;
};

/// Draw from IG(shape, scale), realized as scale divided by a
/// Gamma(shape, 1) draw. Always strictly positive.
double sample_inverse_gamma(double shape, double scale, Rng& rng);

inline double sample_inverse_gamma(const IgParams& p, Rng& rng) {
  return sample_inverse_gamma(p.shape, p.scale, rng);
}

/// Log density of IG(shape, scale) at x > 0.
double inverse_gamma_log_density(double x, double shape, double scale);

}  // namespace volband
