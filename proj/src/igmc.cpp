#include "volband/igmc.hpp"

#include <cmath>
#include <stdexcept>

namespace volband {

namespace {

void check_hyperparams(const HyperParams& h) {
  if (!(h.alpha1 > 0.0) || !std::isfinite(h.alpha1) || !(h.alpha > 0.0) ||
      !std::isfinite(h.alpha) || !(h.alpha_zeta > 0.0) ||
      !std::isfinite(h.alpha_zeta)) {
    throw std::invalid_argument(
        "hyperparams: alpha1, alpha, alpha_zeta must be positive and finite");
  }
}

}  // namespace

IGMCState sample_prior_chain(const HyperParams& h, std::size_t bin_count,
                             Rng& rng) {
  check_hyperparams(h);
  if (bin_count < 1) {
    throw std::invalid_argument("prior chain: bin count must be at least 1");
  }
  IGMCState state;
  state.theta.resize(bin_count);
  state.zeta.resize(bin_count - 1);
  state.alpha = h.alpha;
  state.theta[0] = sample_inverse_gamma(h.alpha1, h.alpha1, rng);
  for (std::size_t j = 0; j + 1 < bin_count; ++j) {
    state.zeta[j] =
        sample_inverse_gamma(h.alpha_zeta, h.alpha_zeta / state.theta[j], rng);
    state.theta[j + 1] =
        sample_inverse_gamma(h.alpha, h.alpha / state.zeta[j], rng);
  }
  return state;
}

IgParams theta_prior_conditional(std::size_t k, const IGMCState& state,
                                 const HyperParams& h) {
  check_hyperparams(h);
  const std::size_t bins = state.theta.size();
  if (k >= bins) {
    throw std::invalid_argument("theta conditional: bin index out of range");
  }
  if (bins == 1) {
    return {h.alpha1, h.alpha1};
  }
  if (k == 0) {
    return {h.alpha1 + h.alpha_zeta, h.alpha1 + h.alpha_zeta / state.zeta[0]};
  }
  if (k + 1 == bins) {
    return {h.alpha, h.alpha / state.zeta[k - 1]};
  }
  return {h.alpha + h.alpha_zeta,
          h.alpha / state.zeta[k - 1] + h.alpha_zeta / state.zeta[k]};
}

IgParams theta_full_conditional(std::size_t k, const IGMCState& state,
                                const HyperParams& h, const IncrementSet& inc,
                                const BinLayout& layout) {
  if (state.theta.size() != layout.bin_count ||
      inc.squared_bin_sums.size() != layout.bin_count) {
    throw std::invalid_argument("theta conditional: dimension mismatch");
  }
  IgParams p = theta_prior_conditional(k, state, h);
  const double n = static_cast<double>(layout.increment_count);
  p.shape += 0.5 * static_cast<double>(layout.increments_in_bin(k));
  p.scale += n * inc.squared_bin_sums[k] / (2.0 * layout.horizon);
  return p;
}

IgParams zeta_full_conditional(std::size_t j, const IGMCState& state,
                               const HyperParams& h) {
  check_hyperparams(h);
  if (state.theta.size() < 2 || j >= state.theta.size() - 1) {
    throw std::invalid_argument("zeta conditional: index out of range");
  }
  return {h.alpha_zeta + h.alpha,
          h.alpha_zeta / state.theta[j] + h.alpha / state.theta[j + 1]};
}

}  // namespace volband
