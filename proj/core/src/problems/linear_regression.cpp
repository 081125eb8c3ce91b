#include "stochkit/problems/linear_regression.hpp"

#include "stochkit/errors.hpp"

namespace stochkit {

namespace {

class linear_regression_problem final : public problem {
 public:
  linear_regression_problem(mat X, vec y, double lambda)
      : problem(X.rows(), X.cols(), lambda), X_(std::move(X)), y_(std::move(y)) {
    if (X_.rows() != y_.size())
      throw argument_error("linear_regression: X rows and y length differ");
    lip_ = gram_spectral_norm(X_) + this->lambda();
  }

  double cost(const vec& w) const override {
    check_w(w);
    const double n = static_cast<double>(this->n());
    return (X_ * w - y_).squaredNorm() / (2.0 * n) + reg(w);
  }

  vec grad(const vec& w, index_span idx) const override {
    check_w(w);
    check_batch(idx);
    vec g = vec::Zero(dim());
    for (const index_t i : idx) {
      const double r = X_.row(i).dot(w) - y_[i];
      g.noalias() += r * X_.row(i).transpose();
    }
    g /= static_cast<double>(idx.size());
    g.noalias() += lambda() * w;
    return g;
  }

  mat hess(const vec& w, index_span idx) const override {
    check_w(w);
    check_batch(idx);
    mat H = mat::Zero(dim(), dim());
    for (const index_t i : idx)
      H.noalias() += X_.row(i).transpose() * X_.row(i);
    H /= static_cast<double>(idx.size());
    H.diagonal().array() += lambda();
    return H;
  }

  vec hess_vec(const vec& w, const vec& v, index_span idx) const override {
    check_w(w);
    check_w(v);
    check_batch(idx);
    vec hv = vec::Zero(dim());
    for (const index_t i : idx)
      hv.noalias() += X_.row(i).dot(v) * X_.row(i).transpose();
    hv /= static_cast<double>(idx.size());
    hv.noalias() += lambda() * v;
    return hv;
  }

  vec predict(const vec& w, const mat& X) const override { return X * w; }
  score_kind score_type() const override { return score_kind::mse; }
  double smooth_lipschitz() const override { return lip_; }

 private:
  mat X_;
  vec y_;
  double lip_ = 0.0;
};

} // namespace

problem_ptr linear_regression(mat X, vec y, double lambda) {
  return std::make_shared<linear_regression_problem>(std::move(X), std::move(y), lambda);
}

} // namespace stochkit
