#include "stochkit/solvers/slbfgs.hpp"

#include "stochkit/session.hpp"
#include "stochkit/solvers/qn_update.hpp"
#include "stochkit/solvers/svrg.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace stochkit {

namespace {

enum class slbfgs_kind { sqn, svrg_sqn, svrg_lbfgs };

slbfgs_kind parse_slbfgs_kind(const std::string& sub) {
  if (sub.empty() || sub == "SQN") return slbfgs_kind::sqn;
  if (sub == "SVRG-SQN") return slbfgs_kind::svrg_sqn;
  if (sub == "SVRG-LBFGS") return slbfgs_kind::svrg_lbfgs;
  throw config_error("slbfgs: unknown sub_mode '" + sub + "'");
}

const char* slbfgs_name(slbfgs_kind k) {
  switch (k) {
    case slbfgs_kind::sqn: return "SQN";
    case slbfgs_kind::svrg_sqn: return "SVRG-SQN";
    default: return "SVRG-LBFGS";
  }
}

} // namespace

solver_result slbfgs(const problem& prob, const options_patch& user) {
  const solver_options o = merge_options(global_defaults(), {}, user);
  const slbfgs_kind kind = parse_slbfgs_kind(o.sub_mode);
  if (prob.has_prox()) throw config_error("slbfgs: composite objectives are not supported");
  if (o.update_period < 1) throw config_error("slbfgs: update_period must be positive");
  solver_session s(prob, o, slbfgs_name(kind));

  const bool use_svrg = kind != slbfgs_kind::sqn;
  const bool hess_pairs = kind != slbfgs_kind::svrg_lbfgs;
  const std::int64_t b_h = o.hess_batch.value_or(2 * o.batch_size);
  if (hess_pairs && (b_h < 1 || b_h > prob.n()))
    throw config_error("slbfgs: hess_batch must lie in [1, n]");

  vec w = s.initial_w();
  pair_memory pairs(o.mem_size);

  // Running mean of iterates inside the current curvature window, plus the
  // previous window's mean once one completes.
  vec u_accum = vec::Zero(prob.dim());
  std::int64_t u_count = 0;
  vec u_prev;
  bool have_u_prev = false;

  vec snap_w, snap_mu;
  vec prev_snap_w, prev_snap_mu;
  bool have_prev_snap = false;

  if (s.record_epoch(w)) return s.finish(std::move(w));
  const std::int64_t m = s.steps_per_epoch();
  const auto b = static_cast<std::int64_t>(o.batch_size);

  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    if (use_svrg) {
      snap_w = w;
      snap_mu = prob.full_grad(snap_w);
      s.add_grad_evals(prob.n());
      if (kind == slbfgs_kind::svrg_lbfgs) {
        // Snapshot differences double as curvature pairs at no extra cost.
        if (have_prev_snap) pairs.push(snap_w - prev_snap_w, snap_mu - prev_snap_mu);
        prev_snap_w = snap_w;
        prev_snap_mu = snap_mu;
        have_prev_snap = true;
      }
    }

    const std::vector<index_list> perm_batches =
        use_svrg ? std::vector<index_list>{} : s.epoch_batches();
    for (std::int64_t t = 0; t < m; ++t) {
      const double eta = s.step_now();
      vec g;
      if (use_svrg) {
        const index_list batch = s.draw_iid_batch(o.batch_size);
        g = svrg_gradient(prob, w, snap_w, snap_mu, batch);
        s.add_grad_evals(2 * b);
      } else {
        const index_list& batch = perm_batches[static_cast<std::size_t>(t)];
        g = prob.grad(w, batch);
        s.add_grad_evals(static_cast<std::int64_t>(batch.size()));
      }

      const vec dir =
          pairs.empty() ? vec(-g) : two_loop_direction(pairs.pairs(), g, pairs.gamma());
      w += eta * dir;
      s.tick();

      if (hess_pairs) {
        u_accum += w;
        ++u_count;
        if (u_count == o.update_period) {
          const vec u_new = u_accum / static_cast<double>(u_count);
          if (have_u_prev) {
            const vec sv = u_new - u_prev;
            const index_list hbatch = s.draw_hess_batch(static_cast<index_t>(b_h));
            const vec yv = prob.hess_vec(u_new, sv, hbatch);
            s.add_grad_evals(b_h);
            pairs.push(sv, yv);
          }
          u_prev = u_new;
          have_u_prev = true;
          u_accum.setZero();
          u_count = 0;
        }
      }
    }
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
