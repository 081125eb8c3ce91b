#include "stochkit/problems/linear_svm.hpp"

#include "stochkit/errors.hpp"

#include <algorithm>

namespace stochkit {

namespace {

class linear_svm_problem final : public problem {
 public:
  linear_svm_problem(mat X, vec y, double lambda)
      : problem(X.rows(), X.cols(), lambda), X_(std::move(X)), y_(std::move(y)) {
    if (X_.rows() != y_.size())
      throw argument_error("linear_svm: X rows and y length differ");
    for (index_t i = 0; i < y_.size(); ++i)
      if (y_[i] != 1.0 && y_[i] != -1.0)
        throw argument_error("linear_svm: labels must be -1 or +1");
    lip_ = gram_spectral_norm(X_) + this->lambda();
  }

  double cost(const vec& w) const override {
    check_w(w);
    double s = 0.0;
    for (index_t i = 0; i < n(); ++i) {
      const double h = std::max(0.0, 1.0 - y_[i] * X_.row(i).dot(w));
      s += h * h;
    }
    return s / (2.0 * static_cast<double>(n())) + reg(w);
  }

  vec grad(const vec& w, index_span idx) const override {
    check_w(w);
    check_batch(idx);
    vec g = vec::Zero(dim());
    for (const index_t i : idx) {
      const double h = 1.0 - y_[i] * X_.row(i).dot(w);
      if (h > 0.0) g.noalias() += (-h * y_[i]) * X_.row(i).transpose();
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
      if (1.0 - y_[i] * X_.row(i).dot(w) > 0.0)
        H.noalias() += X_.row(i).transpose() * X_.row(i);
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
      if (1.0 - y_[i] * X_.row(i).dot(w) > 0.0)
        hv.noalias() += X_.row(i).dot(v) * X_.row(i).transpose();
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

problem_ptr linear_svm(mat X, vec y, double lambda) {
  return std::make_shared<linear_svm_problem>(std::move(X), std::move(y), lambda);
}

} // namespace stochkit
