#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

namespace stochkit {

// Variance-reduced gradient at w for the batch, anchored at a snapshot point
// with its precomputed full gradient: grad(w,S) - grad(snap_w,S) + snap_mu.
// Exposed so tests and derived solvers can drive the estimator directly.
vec svrg_gradient(const problem& prob, const vec& w, const vec& snap_w,
                  const vec& snap_mu, index_span batch);

// Epoch layout: take a snapshot at the current iterate, evaluate the full
// gradient there, then run ceil(n/b) inner steps on iid batches of size b.
solver_result svrg(const problem& prob, const options_patch& user = {});

} // namespace stochkit
