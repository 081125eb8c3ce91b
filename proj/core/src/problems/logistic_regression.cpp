#include "stochkit/problems/logistic_regression.hpp"

#include "stochkit/errors.hpp"

#include <cmath>

namespace stochkit {

namespace {

// log(1 + exp(z)) without overflow for large |z|.
double softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

// 1 / (1 + exp(-z)), evaluated through exp of a non-positive argument.
double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

class logistic_regression_problem final : public problem {
 public:
  logistic_regression_problem(mat X, vec y, double lambda)
      : problem(X.rows(), X.cols(), lambda), X_(std::move(X)), y_(std::move(y)) {
    if (X_.rows() != y_.size())
      throw argument_error("logistic_regression: X rows and y length differ");
    for (index_t i = 0; i < y_.size(); ++i)
      if (y_[i] != 1.0 && y_[i] != -1.0)
        throw argument_error("logistic_regression: labels must be -1 or +1");
    // Per-sample loss curvature is at most 1/4.
    lip_ = 0.25 * gram_spectral_norm(X_) + this->lambda();
  }

  double cost(const vec& w) const override {
    check_w(w);
    double s = 0.0;
    for (index_t i = 0; i < n(); ++i) s += softplus(-y_[i] * X_.row(i).dot(w));
    return s / static_cast<double>(n()) + reg(w);
  }

  vec grad(const vec& w, index_span idx) const override {
    check_w(w);
    check_batch(idx);
    vec g = vec::Zero(dim());
    for (const index_t i : idx) {
      const double z = y_[i] * X_.row(i).dot(w);
      g.noalias() += (-y_[i] * sigmoid(-z)) * X_.row(i).transpose();
    }
    g /= static_cast<double>(idx.size());
    g.noalias() += lambda() * w;
    return g;
  }

  mat hess(const vec& w, index_span idx) const override {
    check_w(w);
    check_batch(idx);
    mat H = mat::Zero(dim(), dim());
    for (const index_t i : idx) {
      const double z = y_[i] * X_.row(i).dot(w);
      const double s = sigmoid(z);
      H.noalias() += (s * (1.0 - s)) * (X_.row(i).transpose() * X_.row(i));
    }
    H /= static_cast<double>(idx.size());
    H.diagonal().array() += lambda();
    return H;
  }

  vec hess_vec(const vec& w, const vec& v, index_span idx) const override {
    check_w(w);
    check_w(v);
    check_batch(idx);
    vec hv = vec::Zero(dim());
    for (const index_t i : idx) {
      const double z = y_[i] * X_.row(i).dot(w);
      const double s = sigmoid(z);
      hv.noalias() += (s * (1.0 - s) * X_.row(i).dot(v)) * X_.row(i).transpose();
    }
    hv /= static_cast<double>(idx.size());
    hv.noalias() += lambda() * v;
    return hv;
  }

  vec predict(const vec& w, const mat& X) const override {
    vec p(X.rows());
    for (index_t i = 0; i < X.rows(); ++i) p[i] = X.row(i).dot(w) >= 0.0 ? 1.0 : -1.0;
    return p;
  }
  score_kind score_type() const override { return score_kind::accuracy; }
  double smooth_lipschitz() const override { return lip_; }

 private:
  mat X_;
  vec y_;
  double lip_ = 0.0;
};

} // namespace

problem_ptr logistic_regression(mat X, vec y, double lambda) {
  return std::make_shared<logistic_regression_problem>(std::move(X), std::move(y), lambda);
}

} // namespace stochkit
