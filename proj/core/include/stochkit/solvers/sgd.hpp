#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

namespace stochkit {

// Mini-batch stochastic gradient descent:
//   w <- prox(w - eta_k * grad(w, S_k), eta_k).
// One epoch is ceil(n/b) inner steps; under permutation sampling (the
// default) every sample is touched exactly once per epoch.
solver_result sgd(const problem& prob, const options_patch& user = {});

// Momentum variants. sub_mode "CM":
//   u <- rho u - eta g(w);        w <- w + u
// sub_mode "CM-NAG" evaluates the gradient at the look-ahead point:
//   u <- rho u - eta g(w + rho u); w <- w + u
solver_result sgd_momentum(const problem& prob, const options_patch& user = {});

} // namespace stochkit
