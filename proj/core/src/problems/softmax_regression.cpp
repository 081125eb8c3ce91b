#include "stochkit/problems/softmax_regression.hpp"

#include "stochkit/errors.hpp"

#include <cmath>

namespace stochkit {

namespace {

class softmax_regression_problem final : public problem {
 public:
  softmax_regression_problem(mat X, vec y, index_t n_classes, double lambda)
      : problem(X.rows(), X.cols() * n_classes, lambda),
        X_(std::move(X)),
        y_(std::move(y)),
        d_(X_.cols()),
        C_(n_classes) {
    if (C_ < 2) throw argument_error("softmax_regression: needs at least 2 classes");
    if (X_.rows() != y_.size())
      throw argument_error("softmax_regression: X rows and y length differ");
    for (index_t i = 0; i < y_.size(); ++i) {
      const double c = y_[i];
      if (c != std::floor(c) || c < 0.0 || c >= static_cast<double>(C_))
        throw argument_error("softmax_regression: labels must be integers in [0, C)");
    }
    // Class-probability curvature matrix diag(p) - pp' has norm at most 1/2.
    lip_ = 0.5 * gram_spectral_norm(X_) + this->lambda();
  }

  double cost(const vec& w) const override {
    check_w(w);
    const auto W = as_matrix(w);
    double s = 0.0;
    for (index_t i = 0; i < n(); ++i) {
      const vec z = W.transpose() * X_.row(i).transpose();
      const double zmax = z.maxCoeff();
      const double lse = zmax + std::log((z.array() - zmax).exp().sum());
      s += lse - z[static_cast<index_t>(y_[i])];
    }
    return s / static_cast<double>(n()) + reg(w);
  }

  vec grad(const vec& w, index_span idx) const override {
    check_w(w);
    check_batch(idx);
    const auto W = as_matrix(w);
    mat G = mat::Zero(d_, C_);
    for (const index_t i : idx) {
      const vec p = probs(W, i);
      for (index_t c = 0; c < C_; ++c) {
        const double coef = p[c] - (static_cast<index_t>(y_[i]) == c ? 1.0 : 0.0);
        G.col(c).noalias() += coef * X_.row(i).transpose();
      }
    }
    G /= static_cast<double>(idx.size());
    vec g = Eigen::Map<const vec>(G.data(), dim());
    g.noalias() += lambda() * w;
    return g;
  }

  mat hess(const vec& w, index_span idx) const override {
    check_w(w);
    check_batch(idx);
    const auto W = as_matrix(w);
    mat H = mat::Zero(dim(), dim());
    for (const index_t i : idx) {
      const vec p = probs(W, i);
      const mat xx = X_.row(i).transpose() * X_.row(i);
      for (index_t a = 0; a < C_; ++a)
        for (index_t b = 0; b < C_; ++b) {
          const double coef = p[a] * ((a == b ? 1.0 : 0.0) - p[b]);
          H.block(a * d_, b * d_, d_, d_).noalias() += coef * xx;
        }
    }
    H /= static_cast<double>(idx.size());
    H.diagonal().array() += lambda();
    return H;
  }

  vec hess_vec(const vec& w, const vec& v, index_span idx) const override {
    check_w(w);
    check_w(v);
    check_batch(idx);
    const auto W = as_matrix(w);
    const auto V = as_matrix(v);
    mat HV = mat::Zero(d_, C_);
    for (const index_t i : idx) {
      const vec p = probs(W, i);
      const vec q = V.transpose() * X_.row(i).transpose();
      const double mix = p.dot(q);
      for (index_t c = 0; c < C_; ++c)
        HV.col(c).noalias() += (p[c] * (q[c] - mix)) * X_.row(i).transpose();
    }
    HV /= static_cast<double>(idx.size());
    vec hv = Eigen::Map<const vec>(HV.data(), dim());
    hv.noalias() += lambda() * v;
    return hv;
  }

  index_t feature_dim() const override { return d_; }

  vec predict(const vec& w, const mat& X) const override {
    const auto W = as_matrix(w);
    vec labels(X.rows());
    for (index_t i = 0; i < X.rows(); ++i) {
      index_t best = 0;
      (W.transpose() * X.row(i).transpose()).maxCoeff(&best);
      labels[i] = static_cast<double>(best);
    }
    return labels;
  }
  score_kind score_type() const override { return score_kind::accuracy; }
  double smooth_lipschitz() const override { return lip_; }

 private:
  Eigen::Map<const mat> as_matrix(const vec& w) const {
    return Eigen::Map<const mat>(w.data(), d_, C_);
  }

  vec probs(const Eigen::Map<const mat>& W, index_t i) const {
    vec z = W.transpose() * X_.row(i).transpose();
    const double zmax = z.maxCoeff();
    vec p = (z.array() - zmax).exp();
    return p / p.sum();
  }

  mat X_;
  vec y_;
  index_t d_;
  index_t C_;
  double lip_ = 0.0;
};

} // namespace

problem_ptr softmax_regression(mat X, vec y, index_t n_classes, double lambda) {
  return std::make_shared<softmax_regression_problem>(std::move(X), std::move(y), n_classes,
                                                      lambda);
}

} // namespace stochkit
