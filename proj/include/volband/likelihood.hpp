#pragma once

#include <span>

#include "volband/bin_layout.hpp"
#include "volband/increments.hpp"

namespace volband {

/// Log of the zero-drift Gaussian pseudo-likelihood for a piecewise
/// constant squared volatility taking value theta[k] on bin k. Increment i
/// is modelled as N(0, theta[bin(i)] * horizon / n), which assumes an
/// equidistant observation grid.
///
/// Equals sum_i [ -log(2 pi v_i)/2 - Y_i^2 / (2 v_i) ] with
/// v_i = theta[bin(i)] * horizon / n.
double log_pseudo_likelihood(std::span<const double> theta,
                             const IncrementSet& inc, const BinLayout& layout);

}  // namespace volband
