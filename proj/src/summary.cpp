#include "volband/summary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace volband {

double interpolated_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) {
    throw std::invalid_argument("quantile: empty sample");
  }
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw std::invalid_argument("quantile: p must lie in [0, 1]");
  }
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double effective_sample_size(std::span<const double> trace) {
  const std::size_t length = trace.size();
  if (length < 100) {
    throw std::invalid_argument("ess: at least 100 samples required");
  }
  double mean = 0.0;
  for (double x : trace) mean += x;
  mean /= static_cast<double>(length);
  double variance = 0.0;
  for (double x : trace) variance += (x - mean) * (x - mean);
  variance /= static_cast<double>(length);
  if (variance == 0.0) return 1.0;

  const auto autocovariance = [&](std::size_t lag) {
    double sum = 0.0;
    for (std::size_t i = 0; i + lag < length; ++i) {
      sum += (trace[i] - mean) * (trace[i + lag] - mean);
    }
    return sum / static_cast<double>(length);
  };

  // Initial positive sequence: add rho(2m-1) + rho(2m) pairs while the pair
  // sum stays positive.
  const std::size_t max_lag = std::min<std::size_t>(length - 1, 1000);
  double rho_sum = 0.0;
  for (std::size_t lag = 1; lag + 1 <= max_lag; lag += 2) {
    const double pair =
        (autocovariance(lag) + autocovariance(lag + 1)) / variance;
    if (pair <= 0.0) break;
    rho_sum += pair;
  }
  const double denom = 1.0 + 2.0 * rho_sum;
  const double ess = static_cast<double>(length) / std::max(denom, 1.0);
  return std::max(ess, 1.0);
}

PosteriorSummary summarize(const ChainOutput& chain, const BinLayout& layout,
                           double level) {
  if (chain.kept < 100) {
    throw std::invalid_argument("summarize: at least 100 kept draws required");
  }
  if (chain.bins != layout.bin_count) {
    throw std::invalid_argument("summarize: chain does not match the layout");
  }
  if (!(level > 0.0) || !(level < 1.0)) {
    throw std::invalid_argument("summarize: level must lie in (0, 1)");
  }

  const double p_lo = (1.0 - level) / 2.0;
  const double p_hi = (1.0 + level) / 2.0;

  PosteriorSummary s;
  s.level = level;
  s.acceptance_rate = chain.acceptance_rate;
  s.bin_left.resize(layout.bin_count);
  s.bin_right.resize(layout.bin_count);
  s.vol_mean.resize(layout.bin_count);
  s.vol_lower.resize(layout.bin_count);
  s.vol_upper.resize(layout.bin_count);
  s.var_mean.resize(layout.bin_count);
  s.var_lower.resize(layout.bin_count);
  s.var_upper.resize(layout.bin_count);
  s.ess.resize(layout.bin_count);

  std::vector<double> theta(chain.kept);
  std::vector<double> vol(chain.kept);
  for (std::size_t k = 0; k < layout.bin_count; ++k) {
    for (std::size_t t = 0; t < chain.kept; ++t) {
      theta[t] = chain.theta_at(t, k);
      vol[t] = std::sqrt(theta[t]);
    }
    s.ess[k] = effective_sample_size(theta);

    double theta_mean = 0.0;
    double vol_mean = 0.0;
    for (std::size_t t = 0; t < chain.kept; ++t) {
      theta_mean += theta[t];
      vol_mean += vol[t];
    }
    s.var_mean[k] = theta_mean / static_cast<double>(chain.kept);
    s.vol_mean[k] = vol_mean / static_cast<double>(chain.kept);

    std::sort(theta.begin(), theta.end());
    std::sort(vol.begin(), vol.end());
    s.var_lower[k] = interpolated_quantile(theta, p_lo);
    s.var_upper[k] = interpolated_quantile(theta, p_hi);
    s.vol_lower[k] = interpolated_quantile(vol, p_lo);
    s.vol_upper[k] = interpolated_quantile(vol, p_hi);

    s.bin_left[k] = layout.edges[k];
    s.bin_right[k] = layout.edges[k + 1];
  }

  if (!chain.alpha_trace.empty()) {
    std::vector<double> alpha = chain.alpha_trace;
    double mean = 0.0;
    for (double a : alpha) mean += a;
    s.alpha_mean = mean / static_cast<double>(alpha.size());
    s.alpha_ess = effective_sample_size(alpha);
    std::sort(alpha.begin(), alpha.end());
    s.alpha_lower = interpolated_quantile(alpha, p_lo);
    s.alpha_upper = interpolated_quantile(alpha, p_hi);
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    s.alpha_mean = nan;
    s.alpha_lower = nan;
    s.alpha_upper = nan;
    s.alpha_ess = nan;
  }
  return s;
}

}  // namespace volband
