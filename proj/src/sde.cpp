#include "volband/sde.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "volband/errors.hpp"

namespace volband {

namespace {

std::vector<double> grid_times(double horizon, std::size_t grid_points) {
  std::vector<double> times(grid_points);
  const double steps = static_cast<double>(grid_points - 1);
  for (std::size_t j = 0; j < grid_points; ++j) {
    times[j] = horizon * (static_cast<double>(j) / steps);
  }
  times.back() = horizon;
  return times;
}

[[noreturn]] void throw_blowup(std::size_t step) {
  char message[96];
  std::snprintf(message, sizeof message,
                "euler step %zu: state left the finite range", step);
  throw numeric_error(message);
}

}  // namespace

ObservationRecord euler_maruyama(const SdeSpec& spec, std::size_t grid_points,
                                 Rng& rng) {
  if (grid_points < 2) {
    throw std::invalid_argument("euler: at least two grid points required");
  }
  if (!(spec.horizon > 0.0) || !std::isfinite(spec.horizon)) {
    throw std::invalid_argument("euler: horizon must be positive and finite");
  }
  if (!spec.drift || !spec.dispersion) {
    throw std::invalid_argument("euler: drift and dispersion must be set");
  }

  std::vector<double> times = grid_times(spec.horizon, grid_points);
  std::vector<double> values(grid_points);
  const double dt = spec.horizon / static_cast<double>(grid_points - 1);
  const double sqrt_dt = std::sqrt(dt);

  values[0] = spec.initial_value;
  for (std::size_t j = 0; j + 1 < grid_points; ++j) {
    const double x = values[j];
    const double next = x + spec.drift(times[j], x) * dt +
                        spec.dispersion(times[j], x) * sqrt_dt * rng.normal();
    if (!std::isfinite(next)) throw_blowup(j);
    values[j + 1] = next;
  }
  return make_observation_record(std::move(times), std::move(values));
}

ObservationRecord subsample(const ObservationRecord& path, std::size_t n) {
  const std::size_t fine = path.increment_count();
  if (n == 0 || fine % n != 0) {
    throw std::invalid_argument(
        "subsample: target count must divide the fine-grid increment count");
  }
  const std::size_t stride = fine / n;
  std::vector<double> times(n + 1);
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    times[i] = path.times[i * stride];
    values[i] = path.values[i * stride];
  }
  return make_observation_record(std::move(times), std::move(values));
}

double blocks_volatility(double t) {
  static constexpr std::array<double, 11> jump_times = {
      0.1, 0.13, 0.15, 0.23, 0.25, 0.4, 0.44, 0.65, 0.76, 0.78, 0.81};
  static constexpr std::array<double, 11> jump_sizes = {
      4.0, -5.0, 3.0, -4.0, 5.0, -4.2, 2.1, 4.3, -3.1, 2.1, -4.2};
  double sum = 0.0;
  for (std::size_t j = 0; j < jump_times.size(); ++j) {
    const double u = t - jump_times[j];
    const double sgn = (u > 0.0) - (u < 0.0);
    sum += jump_sizes[j] * 0.5 * (1.0 + sgn);
  }
  return 10.0 + 3.655606 * sum;
}

CirPath simulate_cir(double eta1, double eta2, double eta3,
                     double initial_value, double horizon,
                     std::size_t grid_points, Rng& rng) {
  if (!(eta1 > 0.0) || !(eta2 > 0.0) || eta3 < 0.0) {
    throw std::invalid_argument(
        "cir: eta1 and eta2 must be positive, eta3 nonnegative");
  }
  if (!(initial_value > 0.0)) {
    throw std::invalid_argument("cir: initial value must be positive");
  }
  SdeSpec spec;
  spec.drift = [eta1, eta2](double, double x) { return eta1 - eta2 * x; };
  spec.dispersion = [eta3](double, double x) {
    return eta3 * std::sqrt(std::max(x, 0.0));
  };
  spec.initial_value = initial_value;
  spec.horizon = horizon;

  CirPath result;
  result.path = euler_maruyama(spec, grid_points, rng);
  result.feller_ok = 2.0 * eta1 > eta3 * eta3;
  result.realized_volatility.resize(result.path.values.size());
  for (std::size_t j = 0; j < result.path.values.size(); ++j) {
    result.realized_volatility[j] =
        eta3 * std::sqrt(std::max(result.path.values[j], 0.0));
  }
  return result;
}

ObservationRecord log_transform(const ObservationRecord& obs) {
  const double base = obs.values.front();
  std::vector<double> transformed(obs.values.size());
  for (std::size_t i = 0; i < obs.values.size(); ++i) {
    if (!(obs.values[i] > 0.0)) {
      throw data_error("log transform: values must be strictly positive");
    }
    transformed[i] = std::log(obs.values[i] / base);
  }
  transformed[0] = 0.0;
  return make_observation_record(obs.times, std::move(transformed));
}

std::vector<double> to_returns(const ObservationRecord& obs) {
  std::vector<double> returns(obs.increment_count());
  for (std::size_t i = 0; i < returns.size(); ++i) {
    if (obs.values[i] == 0.0) {
      throw data_error("returns transform: values must be nonzero");
    }
    returns[i] = (obs.values[i + 1] - obs.values[i]) / obs.values[i];
  }
  return returns;
}

}  // namespace volband
