#pragma once

#include <cstddef>
#include <vector>

#include "volband/bin_layout.hpp"
#include "volband/increments.hpp"
#include "volband/inverse_gamma.hpp"
#include "volband/rng.hpp"

namespace volband {

/// Hyperparameters of the inverse gamma Markov chain prior. alpha1 shapes
/// the initial distribution; alpha and alpha_zeta drive the transitions.
struct HyperParams {
  double alpha1 = 0.1;
  double alpha = 20.0;
  double alpha_zeta = 20.0;
};

/// Current state of the latent chain: theta[k] is the squared volatility
/// on bin k; zeta[j] is the auxiliary variable coupling theta[j] and
/// theta[j+1] (so zeta has bin_count - 1 entries). alpha is the current
/// value of the tied hyperparameter when it is sampled.
struct IGMCState {
  std::vector<double> theta;
  std::vector<double> zeta;
  double alpha = 0.0;
};

/// Forward simulation of the prior chain:
///   theta[0]   ~ IG(alpha1, alpha1)
///   zeta[j]    | theta[j] ~ IG(alpha_zeta, alpha_zeta / theta[j])
///   theta[j+1] | zeta[j]  ~ IG(alpha, alpha / zeta[j])
IGMCState sample_prior_chain(const HyperParams& h, std::size_t bin_count,
                             Rng& rng);

/// Parameters of the full conditional of theta[k] given the rest of the
/// chain and the data: the prior conditional with shape increased by half
/// the bin's increment count and scale by n * Z_k / (2 * horizon).
IgParams theta_full_conditional(std::size_t k, const IGMCState& state,
                                const HyperParams& h, const IncrementSet& inc,
                                const BinLayout& layout);

/// Zero-data reduction of the above (conditional under the prior alone);
/// exposed for prior-only simulation and testing.
IgParams theta_prior_conditional(std::size_t k, const IGMCState& state,
                                 const HyperParams& h);

/// Full conditional of zeta[j] given theta:
/// IG(alpha_zeta + alpha, alpha_zeta / theta[j] + alpha / theta[j+1]).
/// The data enter only through theta, so prior and posterior versions agree.
IgParams zeta_full_conditional(std::size_t j, const IGMCState& state,
                               const HyperParams& h);

}  // namespace volband
