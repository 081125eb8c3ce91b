#pragma once

#include "stochkit/refopt/gradient_descent.hpp"

namespace stochkit {

// Deterministic limited-memory BFGS with backtracking Armijo search, for
// computing reference optima of smooth problems. Proximal problems are
// rejected; route those through gradient_descent.
solver_result lbfgs(const problem& prob, const refopt_options& opts = {});

} // namespace stochkit
