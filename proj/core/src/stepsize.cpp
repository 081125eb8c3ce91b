#include "stochkit/stepsize.hpp"

#include "stochkit/errors.hpp"

#include <cmath>
#include <memory>

namespace stochkit {

double eval_stepsize(std::int64_t k, const step_schedule& sched) {
  if (k < 0) throw argument_error("eval_stepsize: k must be >= 0");
  const double kd = static_cast<double>(k);
  double eta = 0.0;
  switch (sched.kind) {
    case step_alg_kind::fix:
      eta = sched.eta0;
      break;
    case step_alg_kind::decay:
      eta = sched.eta0 / (1.0 + sched.eta0 * sched.lambda * kd);
      break;
    case step_alg_kind::decay_2:
      eta = sched.eta0 / (1.0 + kd);
      break;
    case step_alg_kind::decay_3:
      if (sched.lambda + kd == 0.0)
        throw config_error("step_lambda: decay-3 needs step_lambda + k > 0 (both are zero)");
      eta = sched.eta0 / (sched.lambda + kd);
      break;
    case step_alg_kind::custom:
      if (!sched.custom) throw config_error("custom_step: schedule hook not set");
      eta = sched.custom(k);
      break;
  }
  if (!std::isfinite(eta) || eta <= 0.0)
    throw config_error("step_init: schedule produced a non-positive step");
  return eta;
}

step_schedule make_schedule(const solver_options& opts) {
  step_schedule s;
  s.kind = opts.step_alg;
  s.eta0 = opts.step_init;
  s.lambda = opts.step_lambda;
  if (opts.step_alg == step_alg_kind::custom) {
    // The hook sees the merged options it was configured with.
    auto held = std::make_shared<solver_options>(opts);
    s.custom = [held](std::int64_t k) { return held->custom_step(k, *held); };
  }
  return s;
}

} // namespace stochkit
