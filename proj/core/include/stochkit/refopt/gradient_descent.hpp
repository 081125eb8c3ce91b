#pragma once

#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"
#include "stochkit/refopt/line_search.hpp"

namespace stochkit {

// Deterministic reference optimizers. They record one row per iteration and
// charge n gradient evaluations per full gradient.
struct refopt_options {
  std::int64_t max_iter = 1000;
  double tol_gnorm = 1e-10;
  bool line_search = true; // backtracking Armijo; false = fixed step
  double step = 1.0;       // fixed step, or the first trial of the search
  armijo_config armijo;
  std::int64_t mem_size = 10; // history length (limited-memory solver only)
  bool verbose = false;
  std::optional<vec> w_init;
};

// Full-gradient descent. With a proximal problem each iterate passes through
// prox(w - eta * grad, eta); backtracking then uses the standard quadratic
// upper-bound test on the smooth part, and the stopping rule switches from
// the gradient norm to the prox-residual norm ||w - prox(w - eta g, eta)|| / eta.
solver_result gradient_descent(const problem& prob, const refopt_options& opts = {});

} // namespace stochkit
