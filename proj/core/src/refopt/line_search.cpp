#include "stochkit/refopt/line_search.hpp"

#include <cmath>

namespace stochkit {

double backtracking_armijo(const problem& prob, const vec& w, double f_w, const vec& g,
                           const vec& p, const armijo_config& cfg) {
  const double slope = g.dot(p);
  if (!(slope < 0.0))
    throw line_search_error("line search: direction is not a descent direction", w);
  double alpha = cfg.step0;
  for (int t = 0; t < cfg.max_trials; ++t) {
    const double f_trial = prob.cost(w + alpha * p);
    if (std::isfinite(f_trial) && f_trial <= f_w + cfg.c1 * alpha * slope) return alpha;
    alpha *= cfg.rho;
  }
  throw line_search_error("line search: no acceptable step after " +
                              std::to_string(cfg.max_trials) + " trials",
                          w);
}

} // namespace stochkit
