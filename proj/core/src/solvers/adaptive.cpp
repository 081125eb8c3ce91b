#include "stochkit/solvers/adaptive.hpp"

#include "stochkit/session.hpp"

#include <cmath>
#include <cstdint>

namespace stochkit {

namespace {

enum class ada_kind { adagrad, rmsprop, adadelta };

ada_kind parse_ada_kind(const std::string& sub) {
  if (sub.empty() || sub == "AdaGrad") return ada_kind::adagrad;
  if (sub == "RMSProp") return ada_kind::rmsprop;
  if (sub == "AdaDelta") return ada_kind::adadelta;
  throw config_error("adagrad_family: unknown sub_mode '" + sub + "'");
}

const char* ada_name(ada_kind k) {
  switch (k) {
    case ada_kind::adagrad: return "AdaGrad";
    case ada_kind::rmsprop: return "RMSProp";
    default: return "AdaDelta";
  }
}

} // namespace

solver_result adagrad_family(const problem& prob, const options_patch& user) {
  const solver_options o = merge_options(global_defaults(), {}, user);
  const ada_kind kind = parse_ada_kind(o.sub_mode);
  solver_session s(prob, o, ada_name(kind));

  const double eps = o.epsilon;
  const double beta = o.decay.value_or(kind == ada_kind::adadelta ? 0.95 : 0.9);
  if (kind != ada_kind::adagrad && (beta < 0.0 || beta >= 1.0))
    throw config_error("adagrad_family: decay must lie in [0, 1)");

  vec w = s.initial_w();
  vec acc_g = vec::Zero(prob.dim());
  vec acc_dw = vec::Zero(prob.dim());

  if (s.record_epoch(w)) return s.finish(std::move(w));
  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    for (const auto& batch : s.epoch_batches()) {
      const double eta = s.step_now();
      const vec g = prob.grad(w, batch);
      s.add_grad_evals(static_cast<std::int64_t>(batch.size()));

      vec delta;
      switch (kind) {
        case ada_kind::adagrad:
          acc_g.array() += g.array().square();
          delta = -eta * (g.array() / (acc_g.array().sqrt() + eps)).matrix();
          break;
        case ada_kind::rmsprop:
          acc_g.array() = beta * acc_g.array() + (1.0 - beta) * g.array().square();
          delta = -eta * (g.array() / (acc_g.array().sqrt() + eps)).matrix();
          break;
        case ada_kind::adadelta:
          acc_g.array() = beta * acc_g.array() + (1.0 - beta) * g.array().square();
          delta = -((acc_dw.array() + eps).sqrt() / (acc_g.array() + eps).sqrt() * g.array())
                       .matrix();
          acc_dw.array() = beta * acc_dw.array() + (1.0 - beta) * delta.array().square();
          break;
      }
      w += delta;
      if (prob.has_prox()) w = prob.prox(w, eta);
      s.tick();
    }
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

solver_result adam_family(const problem& prob, const options_patch& user) {
  options_patch local;
  local.step_init = 0.01;
  const solver_options o = merge_options(global_defaults(), local, user);

  const bool adamax = o.sub_mode == "AdaMax";
  if (!adamax && !o.sub_mode.empty() && o.sub_mode != "Adam")
    throw config_error("adam_family: unknown sub_mode '" + o.sub_mode + "'");
  solver_session s(prob, o, adamax ? "AdaMax" : "Adam");

  const double b1 = o.beta1;
  const double b2 = o.beta2;
  if (b1 < 0.0 || b1 >= 1.0) throw config_error("adam_family: beta1 must lie in [0, 1)");
  if (b2 < 0.0 || b2 >= 1.0) throw config_error("adam_family: beta2 must lie in [0, 1)");
  const double eps = o.epsilon;

  vec w = s.initial_w();
  vec m = vec::Zero(prob.dim());
  vec v = vec::Zero(prob.dim());
  double b1_pow = 1.0;
  double b2_pow = 1.0;

  if (s.record_epoch(w)) return s.finish(std::move(w));
  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    for (const auto& batch : s.epoch_batches()) {
      const double eta = s.step_now();
      const vec g = prob.grad(w, batch);
      s.add_grad_evals(static_cast<std::int64_t>(batch.size()));

      m = b1 * m + (1.0 - b1) * g;
      b1_pow *= b1;
      if (adamax) {
        v = (b2 * v.array()).max(g.array().abs()).matrix();
        w -= (eta / (1.0 - b1_pow)) * (m.array() / (v.array() + eps)).matrix();
      } else {
        v.array() = b2 * v.array() + (1.0 - b2) * g.array().square();
        b2_pow *= b2;
        const vec m_hat = m / (1.0 - b1_pow);
        const vec v_hat = v / (1.0 - b2_pow);
        w -= eta * (m_hat.array() / (v_hat.array().sqrt() + eps)).matrix();
      }
      if (prob.has_prox()) w = prob.prox(w, eta);
      s.tick();
    }
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
