#include "stochkit/problems/l1.hpp"

#include "stochkit/errors.hpp"
#include "stochkit/problems/linear_regression.hpp"
#include "stochkit/problems/logistic_regression.hpp"

#include <cmath>

namespace stochkit {

double soft_threshold(double w, double thr) {
  if (thr < 0.0) throw argument_error("soft_threshold: threshold must be >= 0");
  const double mag = std::abs(w) - thr;
  if (mag <= 0.0) return 0.0;
  return w > 0.0 ? mag : -mag;
}

vec soft_threshold(const vec& w, double thr) {
  if (thr < 0.0) throw argument_error("soft_threshold: threshold must be >= 0");
  vec out(w.size());
  for (index_t i = 0; i < w.size(); ++i) out[i] = soft_threshold(w[i], thr);
  return out;
}

namespace {

class l1_problem final : public problem {
 public:
  l1_problem(problem_ptr base, double lambda)
      : problem(base->n(), base->dim(), lambda), base_(std::move(base)) {
    if (lambda <= 0.0) throw argument_error("attach_l1: lambda must be positive");
    if (base_->has_prox())
      throw argument_error("attach_l1: base problem already has a proximal part");
  }

  double cost(const vec& w) const override { return base_->cost(w) + lambda() * w.lpNorm<1>(); }

  double smooth_cost(const vec& w) const override { return base_->cost(w); }

  vec grad(const vec& w, index_span idx) const override { return base_->grad(w, idx); }
  mat hess(const vec& w, index_span idx) const override { return base_->hess(w, idx); }
  vec hess_vec(const vec& w, const vec& v, index_span idx) const override {
    return base_->hess_vec(w, v, idx);
  }

  double reg(const vec& w) const override { return base_->reg(w) + lambda() * w.lpNorm<1>(); }

  bool has_prox() const override { return true; }
  vec prox(const vec& w, double step) const override {
    if (step < 0.0) throw argument_error("prox: step must be >= 0");
    return soft_threshold(w, step * lambda());
  }

  index_t feature_dim() const override { return base_->feature_dim(); }
  vec predict(const vec& w, const mat& X) const override { return base_->predict(w, X); }
  score_kind score_type() const override { return base_->score_type(); }
  double smooth_lipschitz() const override { return base_->smooth_lipschitz(); }

 private:
  problem_ptr base_;
};

} // namespace

problem_ptr attach_l1(problem_ptr base, double lambda) {
  return std::make_shared<l1_problem>(std::move(base), lambda);
}

problem_ptr l1_linear_regression(mat X, vec y, double lambda) {
  return attach_l1(linear_regression(std::move(X), std::move(y), 0.0), lambda);
}

problem_ptr l1_logistic_regression(mat X, vec y, double lambda) {
  return attach_l1(logistic_regression(std::move(X), std::move(y), 0.0), lambda);
}

} // namespace stochkit
