#pragma once

#include "stochkit/errors.hpp"
#include "stochkit/problem.hpp"

namespace stochkit {

// Raised when backtracking exhausts its trial budget; carries the iterate the
// search started from.
class line_search_error : public error {
 public:
  line_search_error(const std::string& msg, vec last_w)
      : error(msg), last_w_(std::move(last_w)) {}
  const vec& last_w() const { return last_w_; }

 private:
  vec last_w_;
};

struct armijo_config {
  double step0 = 1.0;
  double c1 = 1e-4;
  double rho = 0.5;
  int max_trials = 50;
};

// Largest step alpha = step0 * rho^t with
//   f(w + alpha p) <= f(w) + c1 * alpha * g'p.
// p must be a descent direction. Throws line_search_error on exhaustion.
double backtracking_armijo(const problem& prob, const vec& w, double f_w, const vec& g,
                           const vec& p, const armijo_config& cfg);

} // namespace stochkit
