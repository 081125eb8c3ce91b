#include "stochkit/refopt/lbfgs.hpp"

#include "stochkit/errors.hpp"
#include "stochkit/solvers/qn_update.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

namespace stochkit {

solver_result lbfgs(const problem& prob, const refopt_options& opts) {
  if (prob.has_prox())
    throw config_error("lbfgs: proximal problems are not supported");
  if (opts.max_iter < 1) throw config_error("max_iter: must be >= 1");
  if (opts.tol_gnorm < 0.0) throw config_error("tol_gnorm: must be >= 0");
  if (opts.mem_size < 1) throw config_error("mem_size: must be >= 1");
  if (opts.w_init && opts.w_init->size() != prob.dim())
    throw config_error("w_init: dimension mismatch");

  solver_options ropts;
  ropts.tol_gnorm = opts.tol_gnorm;
  ropts.max_epoch = opts.max_iter;

  const auto t0 = std::chrono::steady_clock::now();
  vec w = opts.w_init ? *opts.w_init : vec::Zero(prob.dim());
  run_record rec;
  epoch_counters c;

  auto record = [&](const vec& wk) {
    c.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rec.append(prob, wk, c, ropts);
    if (opts.verbose)
      std::printf("L-BFGS: Iter = %05lld, cost = %.16e, gnorm = %.6e\n",
                  static_cast<long long>(c.iter), rec.cost.back(), rec.gnorm.back());
    if (!std::isfinite(rec.cost.back()))
      throw diverged_error("L-BFGS: diverged (non-finite cost)",
                           solver_result{"L-BFGS", wk, rec, termination_reason::max_epoch, {}});
  };

  record(w);
  termination_reason reason = termination_reason::max_epoch;
  if (rec.gnorm.back() <= opts.tol_gnorm)
    return {"L-BFGS", std::move(w), std::move(rec), termination_reason::gnorm_tol, {}};

  pair_memory mem(opts.mem_size);
  vec g = prob.full_grad(w);
  c.grad_calc_count += prob.n();

  for (std::int64_t it = 1; it <= opts.max_iter; ++it) {
    vec d = two_loop_direction(mem.pairs(), g, mem.gamma());
    if (!(g.dot(d) < 0.0)) d = -g; // curvature went bad; fall back to steepest descent
    armijo_config cfg = opts.armijo;
    cfg.step0 = opts.step;
    const double alpha = backtracking_armijo(prob, w, prob.cost(w), g, d, cfg);
    const vec w_new = w + alpha * d;
    const vec g_new = prob.full_grad(w_new);
    c.grad_calc_count += prob.n();
    mem.push(w_new - w, g_new - g);
    w = w_new;
    g = g_new;
    c.iter += 1;
    record(w);
    if (rec.gnorm.back() <= opts.tol_gnorm) {
      reason = termination_reason::gnorm_tol;
      break;
    }
  }
  return {"L-BFGS", std::move(w), std::move(rec), reason, {}};
}

} // namespace stochkit
