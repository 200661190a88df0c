#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "volband/igmc.hpp"

namespace volband {

/// Treatment of the transition hyperparameter: either alpha and alpha_zeta
/// are fixed, or alpha = alpha_zeta is sampled under an IG hyperprior via
/// a Metropolis-within-Gibbs step.
struct AlphaSettings {
  enum class Mode { kFixed, kHyperprior };

  Mode mode = Mode::kHyperprior;
  double alpha = 20.0;       // fixed mode
  double alpha_zeta = 20.0;  // fixed mode
  double prior_shape = 0.3;  // hyperprior mode
  double prior_scale = 0.3;  // hyperprior mode

  static AlphaSettings fixed_at(double alpha, double alpha_zeta) {
    AlphaSettings s;
    s.mode = Mode::kFixed;
    s.alpha = alpha;
    s.alpha_zeta = alpha_zeta;
    return s;
  }
  static AlphaSettings with_hyperprior(double shape, double scale) {
    AlphaSettings s;
    s.mode = Mode::kHyperprior;
    s.prior_shape = shape;
    s.prior_scale = scale;
    return s;
  }
};

struct SamplerConfig {
  std::size_t iterations = 200000;
  std::size_t burn_in = 1000;
  std::size_t thinning = 1;
  double alpha1 = 0.1;
  AlphaSettings alpha;
  double proposal_sigma = 1.0;      // initial random walk scale
  double target_acceptance = 0.5;   // adaptation target
  std::size_t adaptation_window = 100;
  double iig_shape = 0.1;           // independent IG baseline prior
  double iig_scale = 0.1;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;         // substream index (one per chain)

  /// Throws std::invalid_argument when any field is out of range.
  void validate() const;

  std::size_t kept_count() const { return (iterations - burn_in) / thinning; }
};

/// Kept posterior draws plus sampler diagnostics.
struct ChainOutput {
  std::size_t kept = 0;
  std::size_t bins = 0;
  std::vector<double> theta_samples;  // row-major, kept x bins
  std::vector<double> alpha_trace;    // one entry per kept draw; empty when
                                      // alpha is not sampled
  std::vector<double> final_zeta;
  double acceptance_rate = std::numeric_limits<double>::quiet_NaN();
  std::size_t alpha_accepts = 0;   // post burn-in
  std::size_t alpha_updates = 0;   // post burn-in
  std::size_t floor_count = 0;     // draws floored at the smallest normal
  double sigma_final = 0.0;

  double theta_at(std::size_t draw, std::size_t bin) const {
    return theta_samples[draw * bins + bin];
  }
};

/// One systematic Gibbs scan: redraw theta[0..N) from their full
/// conditionals, then zeta[0..N-1). Draws floored at the smallest positive
/// normal number are counted in *floor_count when provided.
void gibbs_sweep(IGMCState& state, const IncrementSet& inc,
                 const BinLayout& layout, const HyperParams& h, Rng& rng,
                 std::size_t* floor_count = nullptr);

/// Log of the unnormalized full conditional q(alpha) in the tied
/// alpha = alpha_zeta mode, under an IG(prior_shape, prior_scale)
/// hyperprior:
///   log pi(alpha) + 2(N-1) [alpha log alpha - lgamma(alpha)]
///   - alpha sum_j log(theta[j] theta[j+1] zeta[j]^2)
///   - alpha sum_j (1/zeta[j]) (1/theta[j] + 1/theta[j+1]).
double log_q_alpha(double alpha, const IGMCState& state, double prior_shape,
                   double prior_scale);

struct MhResult {
  double alpha = 0.0;
  bool accepted = false;
  std::size_t proposals = 0;
};

/// Random walk Metropolis step for alpha: proposals alpha + N(0, sigma^2)
/// are redrawn until positive (capped at 1000, then a numeric_error is
/// thrown); acceptance uses the truncation-corrected Hastings ratio
/// q(a')/q(a) * Phi_sigma(a)/Phi_sigma(a'), with Phi_sigma the centered
/// normal CDF.
MhResult mh_update_alpha(const IGMCState& state, double prior_shape,
                         double prior_scale, double sigma, Rng& rng);

/// Multiplicative scale adaptation: sigma * exp(observed_rate - target).
double adapt_sigma(double observed_rate, double sigma, double target);

/// Full IGMC sampler: initializes the chain from the prior, then iterates
/// gibbs_sweep plus (in hyperprior mode) one alpha update per sweep. The
/// proposal scale adapts only during burn-in and is frozen afterwards.
/// Fully reproducible from config.seed.
ChainOutput run_igmc_sampler(const SamplerConfig& config,
                             const IncrementSet& inc, const BinLayout& layout);

/// Independent inverse gamma baseline: theta[k] is drawn exactly from
/// IG(iig_shape + m_k/2, iig_scale + n Z_k / (2 horizon)) per kept draw;
/// the posterior factorizes, so no MCMC is involved.
ChainOutput run_iig_sampler(const SamplerConfig& config,
                            const IncrementSet& inc, const BinLayout& layout);

}  // namespace volband
