#pragma once

#include <span>
#include <vector>

#include "volband/bin_layout.hpp"
#include "volband/sampler.hpp"

namespace volband {

/// Per-bin posterior point estimates and central credible bands for the
/// volatility (sqrt theta) and squared volatility (theta), plus chain
/// diagnostics.
struct PosteriorSummary {
  std::vector<double> bin_left;
  std::vector<double> bin_right;
  std::vector<double> vol_mean, vol_lower, vol_upper;  // sqrt(theta)
  std::vector<double> var_mean, var_lower, var_upper;  // theta
  std::vector<double> ess;                             // per-bin theta ESS
  double level = 0.95;
  double acceptance_rate = 0.0;
  // Summary of the alpha trace; NaN when alpha was not sampled.
  double alpha_mean = 0.0, alpha_lower = 0.0, alpha_upper = 0.0,
         alpha_ess = 0.0;
};

/// Empirical quantile by linear interpolation of order statistics
/// (h = (n-1)p between adjacent values). Input must be sorted.
double interpolated_quantile(std::span<const double> sorted, double p);

/// Effective sample size L / (1 + 2 sum rho_lag), with autocorrelations
/// accumulated in consecutive-lag pairs until the first nonpositive pair
/// sum. A constant trace has ESS 1 by convention.
double effective_sample_size(std::span<const double> trace);

/// Point estimates (posterior means of sqrt theta and theta) and central
/// bands at the given level: empirical quantiles at (1-level)/2 and
/// (1+level)/2 of the sqrt theta draws, and of the theta draws.
/// Requires at least 100 kept draws.
PosteriorSummary summarize(const ChainOutput& chain, const BinLayout& layout,
                           double level);

}  // namespace volband
