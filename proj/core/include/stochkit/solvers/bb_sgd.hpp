#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

namespace stochkit {

// Big-batch SGD: the batch doubles (capped at n) whenever the sample variance
// of the per-sample gradients dominates the mean, |g_bar|^2 <= theta V / b.
// The current batch size after each epoch lands in diagnostics["batch_size"].
solver_result bb_sgd(const problem& prob, const options_patch& user = {});

} // namespace stochkit
