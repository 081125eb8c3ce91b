#pragma once

#include "stochkit/options.hpp"

#include <cstdint>
#include <functional>

namespace stochkit {

// Closed-form schedule state. k is the total inner iteration count, starting at 0.
struct step_schedule {
  step_alg_kind kind = step_alg_kind::fix;
  double eta0 = 0.1;
  double lambda = 0.1;
  std::function<double(std::int64_t)> custom;
};

// fix:     eta0
// decay:   eta0 / (1 + eta0 * lambda * k)
// decay-2: eta0 / (1 + k)
// decay-3: eta0 / (lambda + k)   [lambda + k == 0 is a domain error]
double eval_stepsize(std::int64_t k, const step_schedule& sched);

// Binds the schedule fields out of merged options; a custom hook receives the
// options struct it was merged into.
step_schedule make_schedule(const solver_options& opts);

} // namespace stochkit
