#include "stochkit/problems/calc_solution.hpp"

#include "stochkit/errors.hpp"
#include "stochkit/refopt/gradient_descent.hpp"
#include "stochkit/refopt/lbfgs.hpp"

namespace stochkit {

solution calc_solution(const problem& prob, std::int64_t max_iter) {
  refopt_options opts;
  opts.max_iter = max_iter;
  opts.tol_gnorm = 1e-10;
  solver_result res;
  if (prob.has_prox()) {
    const double L = prob.smooth_lipschitz();
    if (!(L > 0.0)) throw config_error("calc_solution: smooth Lipschitz bound is not positive");
    opts.line_search = false;
    opts.step = 1.0 / L;
    res = gradient_descent(prob, opts);
  } else {
    res = lbfgs(prob, opts);
  }
  return {std::move(res.w), res.record.cost.back()};
}

} // namespace stochkit
