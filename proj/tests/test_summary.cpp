#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"
#include "volband/bin_layout.hpp"
#include "volband/inverse_gamma.hpp"
#include "volband/rng.hpp"
#include "volband/sampler.hpp"
#include "volband/summary.hpp"

using volband::BinLayout;
using volband::ChainOutput;
using volband::PosteriorSummary;
using volband::Rng;

namespace {

ChainOutput one_bin_chain(std::vector<double> draws) {
  ChainOutput chain;
  chain.kept = draws.size();
  chain.bins = 1;
  chain.theta_samples = std::move(draws);
  return chain;
}

// Inverts the quadrature CDF by bisection.
double ig_quantile(double p, double shape, double scale) {
  double lo = 1e-12, hi = 1e12;
  for (int it = 0; it < 200; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (oracle::ig_cdf(mid, shape, scale) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

}  // namespace

TEST_CASE("interpolated quantile") {
  std::vector<double> v(100);
  std::iota(v.begin(), v.end(), 1.0);
  CHECK(volband::interpolated_quantile(v, 0.05) == doctest::Approx(5.95));
  CHECK(volband::interpolated_quantile(v, 0.95) == doctest::Approx(95.05));
  CHECK(volband::interpolated_quantile(v, 0.0) == 1.0);
  CHECK(volband::interpolated_quantile(v, 1.0) == 100.0);
  CHECK(volband::interpolated_quantile(v, 0.5) == doctest::Approx(50.5));

  const std::vector<double> flat(10, 3.25);
  CHECK(volband::interpolated_quantile(flat, 0.3) == 3.25);
  const std::vector<double> single{2.0};
  CHECK(volband::interpolated_quantile(single, 0.7) == 2.0);

  const std::vector<double> empty;
  CHECK_THROWS_AS(volband::interpolated_quantile(empty, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(volband::interpolated_quantile(v, -0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(volband::interpolated_quantile(v, 1.1),
                  std::invalid_argument);
}

TEST_CASE("effective sample size") {
  Rng rng(21);
  std::vector<double> iid(10000);
  for (double& x : iid) x = rng.normal();
  const double ess_iid = volband::effective_sample_size(iid);
  CHECK(ess_iid > 9000.0);
  CHECK(ess_iid < 11000.0);

  const std::vector<double> ar1 = oracle::ar1_series(0.9, 100000, 33);
  const double ess_ar1 = volband::effective_sample_size(ar1);
  const double expected = 100000.0 * (1.0 - 0.9) / (1.0 + 0.9);
  CHECK(std::abs(ess_ar1 - expected) / expected < 0.2);

  const std::vector<double> flat(500, 1.0);
  CHECK(volband::effective_sample_size(flat) == 1.0);

  const std::vector<double> tiny(50, 0.0);
  CHECK_THROWS_AS(volband::effective_sample_size(tiny),
                  std::invalid_argument);
}

TEST_CASE("summarize recovers inverse gamma quantiles") {
  const BinLayout layout = volband::build_bin_layout(3, 1.0, 2);
  Rng rng(29);
  std::vector<double> draws(200000);
  for (double& d : draws) d = volband::sample_inverse_gamma(52.5, 35.0, rng);
  const ChainOutput chain = one_bin_chain(std::move(draws));
  const PosteriorSummary s = volband::summarize(chain, layout, 0.9);

  REQUIRE(s.var_mean.size() == 1);
  CHECK(s.bin_left[0] == 0.0);
  CHECK(s.bin_right[0] == 1.0);
  CHECK(s.level == 0.9);

  const double mean_exact = 35.0 / 51.5;
  CHECK(std::abs(s.var_mean[0] - mean_exact) / mean_exact < 0.01);
  const double vol_mean_exact =
      std::exp(0.5 * std::log(35.0) + std::lgamma(52.0) - std::lgamma(52.5));
  CHECK(std::abs(s.vol_mean[0] - vol_mean_exact) / vol_mean_exact < 0.01);

  const double q05 = ig_quantile(0.05, 52.5, 35.0);
  const double q95 = ig_quantile(0.95, 52.5, 35.0);
  CHECK(std::abs(s.var_lower[0] - q05) / q05 < 0.01);
  CHECK(std::abs(s.var_upper[0] - q95) / q95 < 0.01);
  CHECK(std::abs(s.vol_lower[0] - std::sqrt(q05)) / std::sqrt(q05) < 0.01);
  CHECK(std::abs(s.vol_upper[0] - std::sqrt(q95)) / std::sqrt(q95) < 0.01);

  CHECK(s.ess[0] > 150000.0);
  CHECK(std::isnan(s.alpha_mean));
  CHECK(std::isnan(s.alpha_ess));
}

TEST_CASE("bands are nested across levels") {
  const BinLayout layout = volband::build_bin_layout(3, 1.0, 2);
  Rng rng(31);
  std::vector<double> draws(5000);
  for (double& d : draws) d = volband::sample_inverse_gamma(3.0, 4.0, rng);
  const ChainOutput chain = one_bin_chain(std::move(draws));
  const PosteriorSummary narrow = volband::summarize(chain, layout, 0.5);
  const PosteriorSummary wide = volband::summarize(chain, layout, 0.9);
  CHECK(wide.var_lower[0] < narrow.var_lower[0]);
  CHECK(narrow.var_upper[0] < wide.var_upper[0]);
  CHECK(wide.vol_lower[0] < narrow.vol_lower[0]);
  CHECK(narrow.vol_upper[0] < wide.vol_upper[0]);
  CHECK(narrow.var_lower[0] < narrow.var_upper[0]);

  CHECK_THROWS_AS(volband::summarize(chain, layout, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(volband::summarize(chain, layout, 1.0),
                  std::invalid_argument);
  ChainOutput short_chain = one_bin_chain(std::vector<double>(50, 1.0));
  CHECK_THROWS_AS(volband::summarize(short_chain, layout, 0.9),
                  std::invalid_argument);
}

TEST_CASE("volatility band is the square root of the theta band") {
  // With 1001 draws and level 0.9 the quantile index h = 1000 * 0.05 = 50
  // is exact, so no interpolation happens and the monotone map commutes.
  const BinLayout layout = volband::build_bin_layout(3, 1.0, 2);
  Rng rng(37);
  std::vector<double> draws(1001);
  for (double& d : draws) d = volband::sample_inverse_gamma(2.0, 1.0, rng);
  const ChainOutput chain = one_bin_chain(std::move(draws));
  const PosteriorSummary s = volband::summarize(chain, layout, 0.9);
  CHECK(s.vol_lower[0] == std::sqrt(s.var_lower[0]));
  CHECK(s.vol_upper[0] == std::sqrt(s.var_upper[0]));
}

TEST_CASE("summary is invariant under draw reordering") {
  const BinLayout layout = volband::build_bin_layout(8, 1.0, 4);
  Rng rng(41);
  ChainOutput chain;
  chain.kept = 400;
  chain.bins = 2;
  chain.theta_samples.resize(800);
  for (double& x : chain.theta_samples) {
    x = volband::sample_inverse_gamma(3.0, 2.0, rng);
  }
  ChainOutput reversed = chain;
  for (std::size_t t = 0; t < chain.kept; ++t) {
    for (std::size_t k = 0; k < 2; ++k) {
      reversed.theta_samples[t * 2 + k] =
          chain.theta_samples[(chain.kept - 1 - t) * 2 + k];
    }
  }
  const PosteriorSummary a = volband::summarize(chain, layout, 0.9);
  const PosteriorSummary b = volband::summarize(reversed, layout, 0.9);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(a.var_lower[k] == b.var_lower[k]);
    CHECK(a.var_upper[k] == b.var_upper[k]);
    CHECK(a.var_mean[k] == doctest::Approx(b.var_mean[k]).epsilon(1e-12));
    CHECK(a.vol_mean[k] == doctest::Approx(b.vol_mean[k]).epsilon(1e-12));
  }
}

TEST_CASE("alpha trace summary") {
  const BinLayout layout = volband::build_bin_layout(3, 1.0, 2);
  Rng rng(43);
  ChainOutput chain = one_bin_chain(std::vector<double>(200, 1.0));
  chain.theta_samples.clear();
  chain.theta_samples.resize(200);
  chain.alpha_trace.resize(200);
  for (std::size_t t = 0; t < 200; ++t) {
    chain.theta_samples[t] = volband::sample_inverse_gamma(3.0, 2.0, rng);
    chain.alpha_trace[t] = 20.0 + rng.normal();
  }
  chain.acceptance_rate = 0.5;
  const PosteriorSummary s = volband::summarize(chain, layout, 0.9);
  CHECK(s.alpha_mean == doctest::Approx(20.0).epsilon(0.05));
  CHECK(s.alpha_lower < s.alpha_mean);
  CHECK(s.alpha_upper > s.alpha_mean);
  CHECK(s.alpha_ess > 50.0);
  CHECK(s.acceptance_rate == 0.5);

  // Contiguous bin edges on a ragged layout.
  const BinLayout ragged = volband::build_bin_layout(161, 1.0, 12);
  ChainOutput wide;
  wide.kept = 150;
  wide.bins = ragged.bin_count;
  wide.theta_samples.assign(wide.kept * wide.bins, 1.0);
  for (std::size_t t = 0; t < wide.kept; ++t) {
    for (std::size_t k = 0; k < wide.bins; ++k) {
      wide.theta_samples[t * wide.bins + k] =
          volband::sample_inverse_gamma(3.0, 2.0, rng);
    }
  }
  const PosteriorSummary w = volband::summarize(wide, ragged, 0.9);
  REQUIRE(w.bin_left.size() == ragged.bin_count);
  CHECK(w.bin_left.front() == 0.0);
  CHECK(w.bin_right.back() == 1.0);
  for (std::size_t k = 1; k < ragged.bin_count; ++k) {
    CHECK(w.bin_left[k] == w.bin_right[k - 1]);
  }
}
