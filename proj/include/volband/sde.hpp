#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "volband/observation.hpp"
#include "volband/rng.hpp"

namespace volband {

/// Time-dependent one-dimensional SDE dX = drift(t, X) dt
/// + dispersion(t, X) dW on [0, horizon], started at initial_value.
struct SdeSpec {
  std::function<double(double, double)> drift;
  std::function<double(double, double)> dispersion;
  double initial_value = 0.0;
  double horizon = 1.0;
};

/// Explicit Euler path on an equidistant grid of grid_points points
/// (step horizon / (grid_points - 1), coefficients at the left endpoint).
/// Throws numeric_error with the step index if the state leaves the
/// finite range.
ObservationRecord euler_maruyama(const SdeSpec& spec, std::size_t grid_points,
                                 Rng& rng);

/// Keeps every ((grid_points-1)/n)-th point of an equidistant path; the
/// stride must divide exactly (no interpolation). Kept values are copied
/// bit-for-bit.
ObservationRecord subsample(const ObservationRecord& path, std::size_t n);

/// Piecewise constant benchmark volatility on [0, 1]: a vertically shifted
/// scaled sum of 11 step functions, with value 10 at both endpoints.
/// Steps use sgn(0) = 0, so exactly at a jump time the function takes the
/// midpoint value.
double blocks_volatility(double t);

struct CirPath {
  ObservationRecord path;
  /// eta3 * sqrt(max(X_t, 0)) on the same grid as path.
  std::vector<double> realized_volatility;
  /// 2*eta1 > eta3^2 (strict positivity of the square-root process).
  bool feller_ok = true;
};

/// Euler path of the square-root process
/// dX = (eta1 - eta2 X) dt + eta3 sqrt(X) dW, with full truncation
/// (sqrt(max(X,0))) guarding near-zero excursions. A violated positivity
/// condition is reported via feller_ok, not rejected.
CirPath simulate_cir(double eta1, double eta2, double eta3,
                     double initial_value, double horizon,
                     std::size_t grid_points, Rng& rng);

/// Z_i = log(values[i] / values[0]); Z_0 = 0. All values must be positive.
ObservationRecord log_transform(const ObservationRecord& obs);

/// R_i = (values[i] - values[i-1]) / values[i-1], one entry per increment.
/// All values must be nonzero.
std::vector<double> to_returns(const ObservationRecord& obs);

}  // namespace volband
