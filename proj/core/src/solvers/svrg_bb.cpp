#include "stochkit/solvers/svrg_bb.hpp"

#include "stochkit/session.hpp"
#include "stochkit/solvers/svrg.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace stochkit {

solver_result svrg_bb(const problem& prob, const options_patch& user) {
  const solver_options o = merge_options(global_defaults(), {}, user);
  if (prob.has_prox()) throw config_error("svrg_bb: composite objectives are not supported");
  solver_session s(prob, o, "SVRG-BB");

  vec w = s.initial_w();
  if (s.record_epoch(w)) return s.finish(std::move(w));
  const std::int64_t m = s.steps_per_epoch();
  const auto b = static_cast<std::int64_t>(o.batch_size);

  const double eta0 = o.step_init;
  double eta = eta0;
  vec prev_snap_w, prev_snap_mu;
  bool have_prev = false;

  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    const vec snap_w = w;
    const vec snap_mu = prob.full_grad(snap_w);
    s.add_grad_evals(prob.n());

    if (have_prev) {
      const vec sdiff = snap_w - prev_snap_w;
      const double denom =
          static_cast<double>(m) * sdiff.dot(snap_mu - prev_snap_mu);
      if (denom > 0.0 && std::isfinite(denom)) {
        eta = sdiff.squaredNorm() / denom;
        // Clamp pathological ratios so one bad epoch cannot stall or explode.
        eta = std::min(std::max(eta, 1e-10 * eta0), 1e10 * eta0);
      }
    }
    s.diagnostics()["bb_step"].push_back(eta);
    prev_snap_w = snap_w;
    prev_snap_mu = snap_mu;
    have_prev = true;

    for (std::int64_t t = 0; t < m; ++t) {
      const index_list batch = s.draw_iid_batch(o.batch_size);
      const vec v = svrg_gradient(prob, w, snap_w, snap_mu, batch);
      s.add_grad_evals(2 * b);
      w -= eta * v;
      s.tick();
    }
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
