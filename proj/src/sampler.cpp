#include "volband/sampler.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "volband/errors.hpp"

namespace volband {

namespace {

// Smallest positive normal double; draws below it are floored so later
// reciprocals stay finite.
constexpr double kThetaFloor = std::numeric_limits<double>::min();

double floored(double draw, std::size_t* floor_count) {
  if (draw < kThetaFloor) {
    if (floor_count != nullptr) ++(*floor_count);
    return kThetaFloor;
  }
  return draw;
}

// CDF of a centered normal with standard deviation sigma.
double centered_normal_cdf(double x, double sigma) {
  return 0.5 * std::erfc(-x / (sigma * std::numbers::sqrt2));
}

void check_dimensions(const IncrementSet& inc, const BinLayout& layout) {
  if (inc.squared_bin_sums.size() != layout.bin_count ||
      inc.increments.size() != layout.increment_count) {
    throw std::invalid_argument("sampler: increments do not match layout");
  }
}

}  // namespace

void SamplerConfig::validate() const {
  if (iterations == 0) {
    throw std::invalid_argument("sampler config: iterations must be positive");
  }
  if (burn_in >= iterations) {
    throw std::invalid_argument(
        "sampler config: burn-in must be smaller than iterations");
  }
  if (thinning == 0) {
    throw std::invalid_argument("sampler config: thinning must be positive");
  }
  if (!(alpha1 > 0.0) || !std::isfinite(alpha1)) {
    throw std::invalid_argument("sampler config: alpha1 must be positive");
  }
  if (alpha.mode == AlphaSettings::Mode::kFixed) {
    if (!(alpha.alpha > 0.0) || !(alpha.alpha_zeta > 0.0)) {
      throw std::invalid_argument(
          "sampler config: fixed alpha values must be positive");
    }
  } else {
    if (!(alpha.prior_shape > 0.0) || !(alpha.prior_scale > 0.0)) {
      throw std::invalid_argument(
          "sampler config: hyperprior shape and scale must be positive");
    }
  }
  if (!(proposal_sigma > 0.0) || !std::isfinite(proposal_sigma)) {
    throw std::invalid_argument(
        "sampler config: proposal sigma must be positive");
  }
  if (!(target_acceptance > 0.0) || !(target_acceptance < 1.0)) {
    throw std::invalid_argument(
        "sampler config: target acceptance must lie in (0, 1)");
  }
  if (adaptation_window == 0) {
    throw std::invalid_argument(
        "sampler config: adaptation window must be positive");
  }
  if (!(iig_shape > 0.0) || !(iig_scale > 0.0)) {
    throw std::invalid_argument(
        "sampler config: IIG prior parameters must be positive");
  }
}

void gibbs_sweep(IGMCState& state, const IncrementSet& inc,
                 const BinLayout& layout, const HyperParams& h, Rng& rng,
                 std::size_t* floor_count) {
  check_dimensions(inc, layout);
  const std::size_t bins = layout.bin_count;
  if (state.theta.size() != bins || state.zeta.size() + 1 != bins) {
    throw std::invalid_argument("gibbs sweep: state does not match layout");
  }
  for (std::size_t k = 0; k < bins; ++k) {
    const IgParams p = theta_full_conditional(k, state, h, inc, layout);
    state.theta[k] = floored(sample_inverse_gamma(p, rng), floor_count);
  }
  for (std::size_t j = 0; j + 1 < bins; ++j) {
    const IgParams p = zeta_full_conditional(j, state, h);
    state.zeta[j] = floored(sample_inverse_gamma(p, rng), floor_count);
  }
}

double log_q_alpha(double alpha, const IGMCState& state, double prior_shape,
                   double prior_scale) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("log q(alpha): alpha must be positive");
  }
  const std::size_t bins = state.theta.size();
  if (state.zeta.size() + 1 != bins) {
    throw std::invalid_argument("log q(alpha): inconsistent state");
  }
  double log_products = 0.0;   // sum of log(theta[j] theta[j+1] zeta[j]^2)
  double reciprocals = 0.0;    // sum of (1/zeta[j]) (1/theta[j] + 1/theta[j+1])
  for (std::size_t j = 0; j + 1 < bins; ++j) {
    log_products += std::log(state.theta[j]) + std::log(state.theta[j + 1]) +
                    2.0 * std::log(state.zeta[j]);
    reciprocals +=
        (1.0 / state.zeta[j]) * (1.0 / state.theta[j] + 1.0 / state.theta[j + 1]);
  }
  const double pairs = 2.0 * static_cast<double>(bins - 1);
  return inverse_gamma_log_density(alpha, prior_shape, prior_scale) +
         pairs * (alpha * std::log(alpha) - std::lgamma(alpha)) -
         alpha * log_products - alpha * reciprocals;
}

MhResult mh_update_alpha(const IGMCState& state, double prior_shape,
                         double prior_scale, double sigma, Rng& rng) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("mh update: sigma must be positive");
  }
  const double current = state.alpha;
  MhResult result;
  result.alpha = current;

  double proposal = 0.0;
  for (;;) {
    ++result.proposals;
    if (result.proposals > 1000) {
      throw numeric_error(
          "mh update: 1000 consecutive nonpositive proposals; the proposal "
          "scale has degenerated");
    }
    proposal = current + sigma * rng.normal();
    if (proposal > 0.0) break;
  }

  const double log_ratio =
      log_q_alpha(proposal, state, prior_shape, prior_scale) -
      log_q_alpha(current, state, prior_shape, prior_scale) +
      std::log(centered_normal_cdf(current, sigma)) -
      std::log(centered_normal_cdf(proposal, sigma));
  if (std::log(rng.uniform()) < log_ratio) {
    result.alpha = proposal;
    result.accepted = true;
  }
  return result;
}

double adapt_sigma(double observed_rate, double sigma, double target) {
  return sigma * std::exp(observed_rate - target);
}

ChainOutput run_igmc_sampler(const SamplerConfig& config,
                             const IncrementSet& inc, const BinLayout& layout) {
  config.validate();
  check_dimensions(inc, layout);

  const bool sample_alpha = config.alpha.mode == AlphaSettings::Mode::kHyperprior;
  Rng rng = Rng::for_stream(config.seed, config.stream);

  HyperParams h;
  h.alpha1 = config.alpha1;
  if (sample_alpha) {
    // Start at the hyperprior mean when it exists, otherwise at 1.
    const double init = config.alpha.prior_shape > 1.0
                            ? config.alpha.prior_scale /
                                  (config.alpha.prior_shape - 1.0)
                            : 1.0;
    h.alpha = init;
    h.alpha_zeta = init;
  } else {
    h.alpha = config.alpha.alpha;
    h.alpha_zeta = config.alpha.alpha_zeta;
  }

  ChainOutput out;
  out.bins = layout.bin_count;
  out.kept = config.kept_count();
  out.theta_samples.reserve(out.kept * out.bins);
  if (sample_alpha) out.alpha_trace.reserve(out.kept);

  IGMCState state = sample_prior_chain(h, layout.bin_count, rng);
  for (double& value : state.theta) value = floored(value, &out.floor_count);
  for (double& value : state.zeta) value = floored(value, &out.floor_count);
  state.alpha = h.alpha;

  double sigma = config.proposal_sigma;
  std::size_t window_updates = 0;
  std::size_t window_accepts = 0;

  for (std::size_t t = 1; t <= config.iterations; ++t) {
    gibbs_sweep(state, inc, layout, h, rng, &out.floor_count);
    if (sample_alpha) {
      const MhResult mh = mh_update_alpha(state, config.alpha.prior_shape,
                                          config.alpha.prior_scale, sigma, rng);
      state.alpha = mh.alpha;
      h.alpha = mh.alpha;
      h.alpha_zeta = mh.alpha;
      if (t <= config.burn_in) {
        ++window_updates;
        window_accepts += mh.accepted ? 1u : 0u;
        if (window_updates == config.adaptation_window) {
          const double rate = static_cast<double>(window_accepts) /
                              static_cast<double>(window_updates);
          sigma = adapt_sigma(rate, sigma, config.target_acceptance);
          window_updates = 0;
          window_accepts = 0;
        }
      } else {
        ++out.alpha_updates;
        out.alpha_accepts += mh.accepted ? 1u : 0u;
      }
    }
    if (t > config.burn_in && (t - config.burn_in) % config.thinning == 0) {
      out.theta_samples.insert(out.theta_samples.end(), state.theta.begin(),
                               state.theta.end());
      if (sample_alpha) out.alpha_trace.push_back(state.alpha);
    }
  }

  out.final_zeta = state.zeta;
  out.sigma_final = sigma;
  if (out.alpha_updates > 0) {
    out.acceptance_rate = static_cast<double>(out.alpha_accepts) /
                          static_cast<double>(out.alpha_updates);
  }
  return out;
}

ChainOutput run_iig_sampler(const SamplerConfig& config,
                            const IncrementSet& inc, const BinLayout& layout) {
  config.validate();
  check_dimensions(inc, layout);

  Rng rng = Rng::for_stream(config.seed, config.stream);
  const double n = static_cast<double>(layout.increment_count);

  ChainOutput out;
  out.bins = layout.bin_count;
  out.kept = config.kept_count();
  out.theta_samples.reserve(out.kept * out.bins);
  for (std::size_t t = 0; t < out.kept; ++t) {
    for (std::size_t k = 0; k < layout.bin_count; ++k) {
      const double shape =
          config.iig_shape +
          0.5 * static_cast<double>(layout.increments_in_bin(k));
      const double scale = config.iig_scale + n * inc.squared_bin_sums[k] /
                                                  (2.0 * layout.horizon);
      out.theta_samples.push_back(
          floored(sample_inverse_gamma(shape, scale, rng), &out.floor_count));
    }
  }
  return out;
}

}  // namespace volband
