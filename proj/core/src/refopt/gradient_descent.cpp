#include "stochkit/refopt/gradient_descent.hpp"

#include "stochkit/errors.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

namespace stochkit {

namespace {

void validate_refopt(const refopt_options& o, const problem& prob) {
  if (o.max_iter < 1) throw config_error("max_iter: must be >= 1");
  if (!(o.step > 0.0)) throw config_error("step: must be positive");
  if (o.tol_gnorm < 0.0) throw config_error("tol_gnorm: must be >= 0");
  if (o.mem_size < 1) throw config_error("mem_size: must be >= 1");
  if (o.w_init && o.w_init->size() != prob.dim())
    throw config_error("w_init: dimension mismatch");
}

} // namespace

solver_result gradient_descent(const problem& prob, const refopt_options& opts) {
  validate_refopt(opts, prob);
  solver_options ropts; // record/stop plumbing only
  ropts.tol_gnorm = opts.tol_gnorm;
  ropts.max_epoch = opts.max_iter;

  const auto t0 = std::chrono::steady_clock::now();
  vec w = opts.w_init ? *opts.w_init : vec::Zero(prob.dim());
  run_record rec;
  epoch_counters c;
  const char* name = prob.has_prox() ? "PROX-GD" : "GD";

  auto record = [&](const vec& wk) {
    c.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rec.append(prob, wk, c, ropts);
    if (opts.verbose)
      std::printf("%s: Iter = %05lld, cost = %.16e, gnorm = %.6e\n", name,
                  static_cast<long long>(c.iter), rec.cost.back(), rec.gnorm.back());
    if (!std::isfinite(rec.cost.back()))
      throw diverged_error(std::string(name) + ": diverged (non-finite cost)",
                           solver_result{name, wk, rec, termination_reason::max_epoch, {}});
  };

  record(w);
  termination_reason reason = termination_reason::max_epoch;

  if (!prob.has_prox() && rec.gnorm.back() <= opts.tol_gnorm)
    return {name, std::move(w), std::move(rec), termination_reason::gnorm_tol, {}};

  for (std::int64_t it = 1; it <= opts.max_iter; ++it) {
    const vec g = prob.full_grad(w);
    c.grad_calc_count += prob.n();
    double residual;
    if (!prob.has_prox()) {
      double alpha = opts.step;
      if (opts.line_search) {
        armijo_config cfg = opts.armijo;
        cfg.step0 = opts.step;
        alpha = backtracking_armijo(prob, w, prob.cost(w), g, -g, cfg);
      }
      w -= alpha * g;
      residual = -1.0; // filled from the recorded gradient norm below
    } else {
      double alpha = opts.step;
      vec w_next;
      if (opts.line_search) {
        // Shrink until the smooth part satisfies its local quadratic model.
        const double f_w = prob.smooth_cost(w);
        int trials = 0;
        for (;; alpha *= opts.armijo.rho) {
          if (++trials > opts.armijo.max_trials)
            throw line_search_error("proximal backtracking: no acceptable step", w);
          w_next = prob.prox(w - alpha * g, alpha);
          const vec dw = w_next - w;
          const double bound = f_w + g.dot(dw) + dw.squaredNorm() / (2.0 * alpha);
          if (std::isfinite(bound) && prob.smooth_cost(w_next) <= bound) break;
        }
      } else {
        w_next = prob.prox(w - alpha * g, alpha);
      }
      residual = (w_next - w).norm() / alpha;
      w = std::move(w_next);
    }
    c.iter += 1;
    record(w);
    if (residual < 0.0) residual = rec.gnorm.back();
    if (residual <= opts.tol_gnorm) {
      reason = termination_reason::gnorm_tol;
      break;
    }
  }
  return {name, std::move(w), std::move(rec), reason, {}};
}

} // namespace stochkit
