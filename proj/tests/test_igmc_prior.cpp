#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"
#include "volband/bin_layout.hpp"
#include "volband/igmc.hpp"
#include "volband/increments.hpp"
#include "volband/inverse_gamma.hpp"
#include "volband/rng.hpp"

using volband::HyperParams;
using volband::IGMCState;
using volband::IgParams;
using volband::Rng;

TEST_CASE("inverse gamma log density matches the reference formula") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const double x = 0.01 + 20.0 * rng.uniform();
    const double shape = 0.2 + 10.0 * rng.uniform();
    const double scale = 0.2 + 10.0 * rng.uniform();
    CHECK(volband::inverse_gamma_log_density(x, shape, scale) ==
          doctest::Approx(oracle::ig_log_density(x, shape, scale))
              .epsilon(1e-12));
  }
  CHECK_THROWS_AS(volband::sample_inverse_gamma(0.0, 1.0, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(volband::sample_inverse_gamma(1.0, -2.0, rng),
                  std::invalid_argument);
}

TEST_CASE("inverse gamma sampler moments") {
  Rng rng(17);
  const std::size_t draws = 1000000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < draws; ++i) {
    const double x = volband::sample_inverse_gamma(3.0, 4.0, rng);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / static_cast<double>(draws);
  const double variance = sum_sq / static_cast<double>(draws) - mean * mean;
  CHECK(mean == doctest::Approx(2.0).epsilon(0.01));
  CHECK(variance == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("inverse gamma sampler against the quadrature CDF") {
  const std::size_t draws = 100000;
  // Shapes below 1, moderate, and large; scales exercise both branches.
  const double shapes[] = {0.3, 3.0, 52.5};
  const double scales[] = {0.3, 1.0, 35.0};
  for (int c = 0; c < 3; ++c) {
    Rng rng(100 + c);
    std::vector<double> sample(draws);
    for (double& x : sample) {
      x = volband::sample_inverse_gamma(shapes[c], scales[c], rng);
    }
    std::sort(sample.begin(), sample.end());
    const double shape = shapes[c];
    const double scale = scales[c];
    const double ks = oracle::ks_distance(sample, [shape, scale](double x) {
      return oracle::ig_cdf(x, shape, scale);
    });
    CAPTURE(shape);
    CHECK(ks < 0.02);
  }
}

TEST_CASE("prior chain shapes and initial mean") {
  HyperParams h;
  h.alpha1 = 2.0;
  Rng rng(23);
  const IGMCState single = volband::sample_prior_chain(h, 1, rng);
  CHECK(single.theta.size() == 1);
  CHECK(single.zeta.empty());

  const std::size_t draws = 200000;
  double sum = 0.0;
  for (std::size_t i = 0; i < draws; ++i) {
    sum += volband::sample_prior_chain(h, 1, rng).theta[0];
  }
  CHECK(sum / static_cast<double>(draws) == doctest::Approx(2.0).epsilon(0.05));

  const IGMCState chain = volband::sample_prior_chain(h, 8, rng);
  CHECK(chain.theta.size() == 8);
  CHECK(chain.zeta.size() == 7);
  CHECK(std::all_of(chain.theta.begin(), chain.theta.end(),
                    [](double t) { return t > 0.0; }));
}

TEST_CASE("one-step prior mean identity") {
  // E[theta'|theta] = theta * alpha/(alpha-1); alpha_zeta cancels.
  const double theta = 500.0;
  const double alpha = 40.0;
  const double alpha_zeta = 20.0;
  Rng rng(31);
  const std::size_t draws = 200000;
  double sum = 0.0;
  for (std::size_t i = 0; i < draws; ++i) {
    const double zeta =
        volband::sample_inverse_gamma(alpha_zeta, alpha_zeta / theta, rng);
    sum += volband::sample_inverse_gamma(alpha, alpha / zeta, rng);
  }
  const double expected = theta * alpha / (alpha - 1.0);
  CHECK(sum / static_cast<double>(draws) ==
        doctest::Approx(expected).epsilon(0.02));
  CHECK(expected == doctest::Approx(512.8).epsilon(1e-3));
}

TEST_CASE("log-scale drift direction depends on the hyperparameter order") {
  // E[log theta' - log theta] = g(alpha) - g(alpha_zeta),
  // g(a) = log a - digamma(a) > 0 and decreasing.
  const auto run_chain = [](double alpha, double alpha_zeta) {
    Rng rng(47);
    double log_theta = std::log(500.0);
    double theta = 500.0;
    for (int step = 0; step < 2000; ++step) {
      const double zeta =
          volband::sample_inverse_gamma(alpha_zeta, alpha_zeta / theta, rng);
      theta = volband::sample_inverse_gamma(alpha, alpha / zeta, rng);
      log_theta = std::log(theta);
    }
    return log_theta;
  };
  CHECK(run_chain(40.0, 20.0) < std::log(500.0) - 5.0);
  CHECK(run_chain(20.0, 40.0) > std::log(500.0) + 5.0);
}

TEST_CASE("full conditional parameters match the worked cases") {
  HyperParams h;
  h.alpha1 = 0.1;
  h.alpha = 20.0;
  h.alpha_zeta = 20.0;

  // First bin: m=4, n=8, T=1, Z_1=0.5, zeta next to it equal to 2.
  {
    IGMCState state;
    state.theta = {1.0, 1.0};
    state.zeta = {2.0};
    volband::BinLayout layout = volband::build_bin_layout(8, 1.0, 4);
    volband::IncrementSet inc;
    inc.increments.assign(8, 0.0);
    inc.squared_bin_sums = {0.5, 0.0};
    const IgParams p = volband::theta_full_conditional(0, state, h, inc, layout);
    CHECK(p.shape == doctest::Approx(22.1).epsilon(1e-12));
    CHECK(p.scale == doctest::Approx(12.1).epsilon(1e-12));
  }

  // Interior bin: m=25, n=4000, T=1, Z_k=0.01, flanking zetas 2 and 4.
  {
    volband::BinLayout layout = volband::build_bin_layout(4000, 1.0, 25);
    volband::IncrementSet inc;
    inc.increments.assign(4000, 0.0);
    inc.squared_bin_sums.assign(160, 0.0);
    inc.squared_bin_sums[1] = 0.01;
    IGMCState wide;
    wide.theta.assign(160, 1.0);
    wide.zeta.assign(159, 1.0);
    wide.zeta[0] = 2.0;
    wide.zeta[1] = 4.0;
    const IgParams p = volband::theta_full_conditional(1, wide, h, inc, layout);
    CHECK(p.shape == doctest::Approx(52.5).epsilon(1e-12));
    CHECK(p.scale == doctest::Approx(35.0).epsilon(1e-12));
  }

  // Zeta conditional between theta 4 and 5.
  {
    IGMCState state;
    state.theta = {4.0, 5.0};
    state.zeta = {1.0};
    const IgParams p = volband::zeta_full_conditional(0, state, h);
    CHECK(p.shape == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(p.scale == doctest::Approx(9.0).epsilon(1e-12));
    // Equal thetas give E[1/zeta] = shape/scale = theta.
    state.theta = {4.0, 4.0};
    const IgParams q = volband::zeta_full_conditional(0, state, h);
    CHECK(q.shape / q.scale == doctest::Approx(4.0).epsilon(1e-12));
  }

  // Single bin: everything collapses onto theta_1.
  {
    IGMCState state;
    state.theta = {1.0};
    volband::BinLayout layout = volband::build_bin_layout(3, 1.0, 2);
    REQUIRE(layout.bin_count == 1);
    volband::IncrementSet inc;
    inc.increments.assign(3, 0.0);
    inc.squared_bin_sums = {0.9};
    const IgParams p = volband::theta_full_conditional(0, state, h, inc, layout);
    CHECK(p.shape == doctest::Approx(0.1 + 1.5).epsilon(1e-12));
    CHECK(p.scale == doctest::Approx(0.1 + 3.0 * 0.9 / 2.0).epsilon(1e-12));
  }

  IGMCState state;
  state.theta = {1.0, 1.0};
  state.zeta = {1.0};
  CHECK_THROWS_AS(volband::theta_prior_conditional(5, state, h),
                  std::invalid_argument);
  CHECK_THROWS_AS(volband::zeta_full_conditional(1, state, h),
                  std::invalid_argument);
}

TEST_CASE("conditionals reproduce joint density ratios") {
  Rng rng(59);
  const double points[] = {0.04, 0.4, 4.0, 40.0};
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t bins = 2 + trial % 6;
    const std::size_t per_bin = 3;
    const std::size_t n = bins * per_bin;
    HyperParams h;
    h.alpha1 = 0.1 + 2.0 * rng.uniform();
    h.alpha = 1.0 + 30.0 * rng.uniform();
    h.alpha_zeta = 1.0 + 30.0 * rng.uniform();

    IGMCState state;
    state.theta.resize(bins);
    state.zeta.resize(bins - 1);
    for (double& t : state.theta) t = 0.2 + 5.0 * rng.uniform();
    for (double& z : state.zeta) z = 0.2 + 5.0 * rng.uniform();

    const volband::BinLayout layout = volband::build_bin_layout(n, 1.0, per_bin);
    volband::IncrementSet inc;
    inc.increments.resize(n);
    for (double& y : inc.increments) y = 0.05 * rng.normal();
    inc.squared_bin_sums.assign(bins, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      inc.squared_bin_sums[volband::bin_of_increment(layout, i)] +=
          inc.increments[i] * inc.increments[i];
    }

    const auto joint_log = [&](const IGMCState& s) {
      return oracle::chain_log_density(s.theta, s.zeta, h.alpha1, h.alpha,
                                       h.alpha_zeta) +
             oracle::gaussian_log_likelihood(inc.increments, s.theta, per_bin,
                                             1.0);
    };
    const auto prior_log = [&](const IGMCState& s) {
      return oracle::chain_log_density(s.theta, s.zeta, h.alpha1, h.alpha,
                                       h.alpha_zeta);
    };

    for (std::size_t k = 0; k < bins; ++k) {
      const IgParams full = volband::theta_full_conditional(k, state, h, inc,
                                                            layout);
      const IgParams prior = volband::theta_prior_conditional(k, state, h);
      const double a = points[trial % 4];
      const double b = points[(trial + 1) % 4];
      IGMCState at_a = state;
      IGMCState at_b = state;
      at_a.theta[k] = a;
      at_b.theta[k] = b;

      const double cond_full = oracle::ig_log_density(a, full.shape, full.scale) -
                               oracle::ig_log_density(b, full.shape, full.scale);
      const double joint_full = joint_log(at_a) - joint_log(at_b);
      CHECK(std::abs(cond_full - joint_full) <=
            1e-8 * std::max(1.0, std::abs(joint_full)));

      const double cond_prior =
          oracle::ig_log_density(a, prior.shape, prior.scale) -
          oracle::ig_log_density(b, prior.shape, prior.scale);
      const double joint_prior = prior_log(at_a) - prior_log(at_b);
      CHECK(std::abs(cond_prior - joint_prior) <=
            1e-8 * std::max(1.0, std::abs(joint_prior)));

      // Data-tilted shapes dominate the prior shapes whenever m >= 1.
      CHECK(full.shape > prior.shape);
    }

    for (std::size_t j = 0; j + 1 < bins; ++j) {
      const IgParams p = volband::zeta_full_conditional(j, state, h);
      const double a = points[(trial + 2) % 4];
      const double b = points[trial % 4];
      IGMCState at_a = state;
      IGMCState at_b = state;
      at_a.zeta[j] = a;
      at_b.zeta[j] = b;
      const double cond = oracle::ig_log_density(a, p.shape, p.scale) -
                          oracle::ig_log_density(b, p.shape, p.scale);
      const double joint = prior_log(at_a) - prior_log(at_b);
      CHECK(std::abs(cond - joint) <= 1e-8 * std::max(1.0, std::abs(joint)));
    }
  }
}
