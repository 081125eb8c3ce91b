#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

namespace stochkit {

// Incremental quasi-Newton: one BFGS matrix, iterate, and gradient per
// sample, visited cyclically, with the aggregate solve
//   w = (sum B_i)^{-1} (sum B_i z_i - sum g_i)
// kept incremental. Unit step, no schedule. Memory is n matrices of dim^2
// doubles, so the solver refuses configurations beyond a sanity cap.
// Smooth objectives only.
solver_result iqn(const problem& prob, const options_patch& user = {});

} // namespace stochkit
