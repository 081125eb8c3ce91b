#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

namespace stochkit {

// Stochastic L-BFGS family. All variants steer a noisy gradient estimate
// through the two-loop recursion; they differ in the estimate and in where
// curvature pairs come from:
//   SQN        plain batch gradient; every update_period steps, s spans the
//              averaged iterates and y = subsampled Hessian-vector product
//   SVRG-SQN   the SVRG estimator with the same Hessian-action pairs
//   SVRG-LBFGS the SVRG estimator with pairs from snapshot differences,
//              y = difference of full snapshot gradients
// Hessian-action batches draw hess_batch iid samples (default 2*batch_size).
// Smooth objectives only.
solver_result slbfgs(const problem& prob, const options_patch& user = {});

} // namespace stochkit
