#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

namespace stochkit {

// Recursive estimator v_t = grad(w_t,S) - grad(w_{t-1},S) + v_{t-1} seeded by
// the full gradient each epoch. sub_mode SARAH-Plus adds the early exit when
// |v_t|^2 drops below gamma |v_0|^2. Smooth objectives only.
solver_result sarah(const problem& prob, const options_patch& user = {});

} // namespace stochkit
