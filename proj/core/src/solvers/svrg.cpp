#include "stochkit/solvers/svrg.hpp"

#include "stochkit/session.hpp"

#include <cstdint>
#include <utility>

namespace stochkit {

vec svrg_gradient(const problem& prob, const vec& w, const vec& snap_w,
                  const vec& snap_mu, index_span batch) {
  return prob.grad(w, batch) - prob.grad(snap_w, batch) + snap_mu;
}

solver_result svrg(const problem& prob, const options_patch& user) {
  const solver_options o = merge_options(global_defaults(), {}, user);
  solver_session s(prob, o, "SVRG");

  vec w = s.initial_w();
  if (s.record_epoch(w)) return s.finish(std::move(w));
  const std::int64_t m = s.steps_per_epoch();
  const auto b = static_cast<std::int64_t>(o.batch_size);

  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    const vec snap_w = w;
    const vec snap_mu = prob.full_grad(snap_w);
    s.add_grad_evals(prob.n());

    for (std::int64_t t = 0; t < m; ++t) {
      const index_list batch = s.draw_iid_batch(o.batch_size);
      const double eta = s.step_now();
      const vec v = svrg_gradient(prob, w, snap_w, snap_mu, batch);
      s.add_grad_evals(2 * b);
      w -= eta * v;
      if (prob.has_prox()) w = prob.prox(w, eta);
      s.tick();
    }
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
