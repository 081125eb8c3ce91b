#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

namespace stochkit {

// Online (L-)BFGS. Each step evaluates the batch gradient twice, at w and at
// w + eta d, so the curvature pair uses a consistent sample. sub_mode Inf-mem
// maintains the dense inverse Hessian; Lim-mem keeps a two-loop pair memory.
// delta > 0 shifts y by -delta s (regularized flavor); damped additionally
// applies Powell damping and requires Inf-mem. Pairs with nonpositive
// curvature are skipped; the running skip count is diagnostics["skipped"].
// Names follow the configuration: oBFGS-Inf, oLBFGS-Lim, Reg-oBFGS-Inf,
// Damp-oBFGS-Inf. Smooth objectives only.
solver_result obfgs(const problem& prob, const options_patch& user = {});

} // namespace stochkit
