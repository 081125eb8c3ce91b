#include "stochkit/solvers/obfgs.hpp"

#include "stochkit/session.hpp"
#include "stochkit/solvers/qn_update.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace stochkit {

namespace {

std::string obfgs_name(bool inf_mem, double delta, bool damped) {
  if (damped) return "Damp-oBFGS-Inf";
  if (delta != 0.0) return inf_mem ? "Reg-oBFGS-Inf" : "Reg-oLBFGS-Lim";
  return inf_mem ? "oBFGS-Inf" : "oLBFGS-Lim";
}

} // namespace

solver_result obfgs(const problem& prob, const options_patch& user) {
  const solver_options o = merge_options(global_defaults(), {}, user);
  const bool inf_mem = o.sub_mode.empty() || o.sub_mode == "Inf-mem";
  if (!inf_mem && o.sub_mode != "Lim-mem")
    throw config_error("obfgs: unknown sub_mode '" + o.sub_mode + "'");
  if (o.damped && !inf_mem)
    throw config_error("obfgs: damping requires the Inf-mem form");
  if (prob.has_prox()) throw config_error("obfgs: composite objectives are not supported");
  if (o.delta < 0.0) throw config_error("obfgs: delta must be nonnegative");
  solver_session s(prob, o, obfgs_name(inf_mem, o.delta, o.damped));

  const index_t d = prob.dim();
  vec w = s.initial_w();

  mat H;                       // dense inverse Hessian (Inf-mem)
  pair_memory pairs(o.mem_size);  // two-loop store (Lim-mem)
  bool have_pair = false;
  std::int64_t skipped = 0;

  if (s.record_epoch(w)) return s.finish(std::move(w));
  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    for (const auto& batch : s.epoch_batches()) {
      const double eta = s.step_now();
      const vec g_old = prob.grad(w, batch);

      vec dir;
      if (inf_mem) {
        dir = have_pair ? vec(-(H * g_old)) : vec(-g_old);
      } else {
        dir = pairs.empty() ? vec(-g_old)
                            : two_loop_direction(pairs.pairs(), g_old, pairs.gamma());
      }

      const vec w_new = w + eta * dir;
      // Same batch on both sides so s and y describe one curvature sample.
      const vec g_new = prob.grad(w_new, batch);
      s.add_grad_evals(2 * static_cast<std::int64_t>(batch.size()));

      const vec sv = w_new - w;
      vec yv = g_new - g_old;
      if (o.delta > 0.0) yv -= o.delta * sv;

      // Damping repairs the pair against the current metric, so it runs
      // before the curvature test. Bs comes from solving H (Bs) = s rather
      // than forming B; before the first update B is the identity.
      if (inf_mem && o.damped) {
        const vec Bs = have_pair ? vec(H.llt().solve(sv)) : sv;
        yv = powell_damp(sv, yv, Bs);
      }

      const double sy = sv.dot(yv);
      if (sy > 0.0 && std::isfinite(sy)) {
        if (inf_mem) {
          if (!have_pair) {
            // Scale the seed matrix to the first observed curvature.
            const double yy = yv.squaredNorm();
            H = (yy > 0.0 ? sy / yy : 1.0) * mat::Identity(d, d);
            have_pair = true;
          }
          bfgs_update_inverse(H, sv, yv);
        } else {
          pairs.push(sv, yv);
        }
      } else {
        ++skipped;
      }

      w = w_new;
      s.tick();
    }
    s.diagnostics()["skipped"].push_back(static_cast<double>(skipped));
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
