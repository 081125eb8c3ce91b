#include "stochkit/solvers/sarah.hpp"

#include "stochkit/session.hpp"

#include <cstdint>
#include <utility>

namespace stochkit {

solver_result sarah(const problem& prob, const options_patch& user) {
  const solver_options o = merge_options(global_defaults(), {}, user);
  const bool plus = o.sub_mode == "SARAH-Plus";
  if (!plus && !o.sub_mode.empty() && o.sub_mode != "SARAH")
    throw config_error("sarah: unknown sub_mode '" + o.sub_mode + "'");
  if (prob.has_prox()) throw config_error("sarah: composite objectives are not supported");
  if (plus && !(o.sarah_gamma > 0.0 && o.sarah_gamma <= 1.0))
    throw config_error("sarah: sarah_gamma must lie in (0, 1]");
  solver_session s(prob, o, plus ? "SARAH-Plus" : "SARAH");

  vec w = s.initial_w();
  if (s.record_epoch(w)) return s.finish(std::move(w));
  const std::int64_t m = s.steps_per_epoch();
  const auto b = static_cast<std::int64_t>(o.batch_size);

  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    // t = 0 is a full-gradient step; the recursion then walks iid batches.
    vec v = prob.full_grad(w);
    s.add_grad_evals(prob.n());
    const double v0_sq = v.squaredNorm();

    vec w_prev = w;
    double eta = s.step_now();
    w -= eta * v;
    s.tick();

    for (std::int64_t t = 1; t < m; ++t) {
      if (plus && v.squaredNorm() <= o.sarah_gamma * v0_sq) break;
      const index_list batch = s.draw_iid_batch(o.batch_size);
      eta = s.step_now();
      v += prob.grad(w, batch) - prob.grad(w_prev, batch);
      s.add_grad_evals(2 * b);
      w_prev = w;
      w -= eta * v;
      s.tick();
    }
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
