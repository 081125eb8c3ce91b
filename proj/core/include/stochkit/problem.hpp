#pragma once

#include "stochkit/types.hpp"

#include <memory>

namespace stochkit {

enum class score_kind { accuracy, mse };

struct score_report {
  score_kind kind;
  double value;
};

// Regularized finite-sum objective
//   f(w) = (1/n) sum_i f_i(w),  f_i(w) = L(w; x_i, y_i) + lambda * R(w).
// Solvers only ever see this interface; every gradient they consume is the
// mini-batch mean over an index set. For problems with a non-smooth
// regularizer, cost() includes the regularizer while grad()/hess() cover the
// smooth part only and prox() is available.
class problem {
 public:
  problem(index_t n, index_t dim, double lambda);
  virtual ~problem() = default;

  index_t n() const { return n_; }
  // Parameter dimension (d * C for the multiclass model).
  index_t dim() const { return dim_; }
  double lambda() const { return lambda_; }

  virtual double cost(const vec& w) const = 0;

  // (1/|idx|) sum_{i in idx} grad f_i(w). idx must be nonempty, entries in [0, n).
  virtual vec grad(const vec& w, index_span idx) const = 0;

  // Exact full gradient; identical to grad over all indices.
  vec full_grad(const vec& w) const;

  // Mini-batch mean Hessian, dim x dim.
  virtual mat hess(const vec& w, index_span idx) const = 0;

  // Mini-batch mean Hessian-vector product; never forms the matrix.
  virtual vec hess_vec(const vec& w, const vec& v, index_span idx) const = 0;

  // Regularizer value included in cost at w.
  virtual double reg(const vec& w) const;

  // Differentiable part of cost; equals cost() for smooth problems, drops the
  // L1 term otherwise. This is the function grad() differentiates.
  virtual double smooth_cost(const vec& w) const { return cost(w); }

  virtual bool has_prox() const { return false; }
  // Proximal map of the non-smooth part at the given scalar step.
  virtual vec prox(const vec& w, double step) const;

  // Feature dimension of one sample (== dim except for the multiclass model).
  virtual index_t feature_dim() const { return dim_; }

  // Regression: fitted values. Classification: hard labels.
  virtual vec predict(const vec& w, const mat& X) const = 0;
  virtual score_kind score_type() const = 0;
  score_report score(const vec& w, const mat& X_test, const vec& y_test) const;

  // Upper bound on the spectral norm of the smooth-part Hessian.
  virtual double smooth_lipschitz() const = 0;

  index_span all_indices() const { return all_; }

 protected:
  void check_w(const vec& w) const;
  void check_batch(index_span idx) const;

 private:
  index_t n_;
  index_t dim_;
  double lambda_;
  index_list all_;
};

using problem_ptr = std::shared_ptr<const problem>;

// Largest eigenvalue of the mean outer-product operator v -> X^T (X v) / n,
// by power iteration with a small inflation so the result upper-bounds the
// true value. Used for Lipschitz bounds at construction time.
double gram_spectral_norm(const mat& X, int iters = 1000);

} // namespace stochkit
