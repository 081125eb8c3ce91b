#include "stochkit/solvers/bb_sgd.hpp"

#include "stochkit/session.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace stochkit {

solver_result bb_sgd(const problem& prob, const options_patch& user) {
  const solver_options o = merge_options(global_defaults(), {}, user);
  if (!(o.bb_theta > 0.0)) throw config_error("bb_sgd: bb_theta must be positive");
  if (!(o.bb_growth > 1.0)) throw config_error("bb_sgd: bb_growth must exceed 1");
  solver_session s(prob, o, "BB-SGD");

  vec w = s.initial_w();
  const index_t n = prob.n();
  index_t b = static_cast<index_t>(o.batch_size);

  if (s.record_epoch(w)) return s.finish(std::move(w));
  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    // An epoch is over once n samples have been consumed, whatever the
    // batch size was along the way.
    index_t consumed = 0;
    while (consumed < n) {
      const index_list batch = s.draw_iid_batch(b);
      const double eta = s.step_now();

      vec g_bar = vec::Zero(prob.dim());
      std::vector<vec> grads;
      grads.reserve(batch.size());
      for (const index_t i : batch) {
        grads.push_back(prob.grad(w, index_span(&i, 1)));
        g_bar += grads.back();
      }
      g_bar /= static_cast<double>(batch.size());
      s.add_grad_evals(static_cast<std::int64_t>(batch.size()));

      // Unbiased sample variance of the per-sample gradients. Undefined for
      // b = 1, which therefore always asks for growth.
      double variance = 0.0;
      bool grow = true;
      if (batch.size() > 1) {
        for (const vec& gi : grads) variance += (gi - g_bar).squaredNorm();
        variance /= static_cast<double>(batch.size() - 1);
        grow = variance > 0.0 &&
               g_bar.squaredNorm() <= o.bb_theta * variance / static_cast<double>(batch.size());
      }

      w -= eta * g_bar;
      if (prob.has_prox()) w = prob.prox(w, eta);
      s.tick();
      consumed += static_cast<index_t>(batch.size());

      if (grow && b < n)
        b = std::min<index_t>(n, static_cast<index_t>(static_cast<double>(b) * o.bb_growth));
    }
    s.diagnostics()["batch_size"].push_back(static_cast<double>(b));
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
