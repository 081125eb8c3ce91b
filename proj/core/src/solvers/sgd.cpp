#include "stochkit/solvers/sgd.hpp"

#include "stochkit/errors.hpp"
#include "stochkit/session.hpp"

namespace stochkit {

solver_result sgd(const problem& prob, const options_patch& user) {
  const solver_options o = merge_options(global_defaults(), {}, user);
  solver_session s(prob, o, "SGD");
  vec w = s.initial_w();
  if (s.record_epoch(w)) return s.finish(std::move(w));
  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    for (const auto& batch : s.epoch_batches()) {
      const double eta = s.step_now();
      const vec g = prob.grad(w, batch);
      s.add_grad_evals(static_cast<std::int64_t>(batch.size()));
      w -= eta * g;
      if (prob.has_prox()) w = prob.prox(w, eta);
      s.tick();
    }
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

solver_result sgd_momentum(const problem& prob, const options_patch& user) {
  options_patch local;
  local.sub_mode = "CM";
  const solver_options o = merge_options(global_defaults(), local, user);
  bool nag = false;
  if (o.sub_mode == "CM-NAG")
    nag = true;
  else if (o.sub_mode != "CM")
    throw config_error("sub_mode: momentum solver knows CM and CM-NAG, got '" + o.sub_mode +
                       "'");
  solver_session s(prob, o, nag ? "SGD-CM-NAG" : "SGD-CM");
  vec w = s.initial_w();
  vec u = vec::Zero(prob.dim());
  if (s.record_epoch(w)) return s.finish(std::move(w));
  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    for (const auto& batch : s.epoch_batches()) {
      const double eta = s.step_now();
      const vec g = nag ? prob.grad(w + o.momentum * u, batch) : prob.grad(w, batch);
      s.add_grad_evals(static_cast<std::int64_t>(batch.size()));
      u = o.momentum * u - eta * g;
      w += u;
      if (prob.has_prox()) w = prob.prox(w, eta);
      s.tick();
    }
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
