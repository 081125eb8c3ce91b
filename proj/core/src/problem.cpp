#include "stochkit/problem.hpp"

#include "stochkit/errors.hpp"

#include <cmath>
#include <string>

namespace stochkit {

problem::problem(index_t n, index_t dim, double lambda)
    : n_(n), dim_(dim), lambda_(lambda) {
  if (n < 1) throw argument_error("problem: needs at least one sample");
  if (dim < 1) throw argument_error("problem: parameter dimension must be >= 1");
  if (!(lambda >= 0.0)) throw argument_error("problem: lambda must be >= 0");
  all_.resize(static_cast<std::size_t>(n));
  for (index_t i = 0; i < n; ++i) all_[static_cast<std::size_t>(i)] = i;
}

vec problem::full_grad(const vec& w) const { return grad(w, all_); }

double problem::reg(const vec& w) const {
  return 0.5 * lambda_ * w.squaredNorm();
}

vec problem::prox(const vec&, double) const {
  throw argument_error("prox: problem has no proximal operator");
}

score_report problem::score(const vec& w, const mat& X_test, const vec& y_test) const {
  if (X_test.rows() != y_test.size())
    throw argument_error("score: X_test rows and y_test length differ");
  if (X_test.cols() != feature_dim())
    throw argument_error("score: X_test has " + std::to_string(X_test.cols()) +
                         " columns, expected " + std::to_string(feature_dim()));
  if (X_test.rows() == 0) throw argument_error("score: empty test set");
  const vec pred = predict(w, X_test);
  if (score_type() == score_kind::mse) {
    return {score_kind::mse, (pred - y_test).squaredNorm() / static_cast<double>(y_test.size())};
  }
  index_t hits = 0;
  for (index_t i = 0; i < y_test.size(); ++i)
    if (pred[i] == y_test[i]) ++hits;
  return {score_kind::accuracy, static_cast<double>(hits) / static_cast<double>(y_test.size())};
}

void problem::check_w(const vec& w) const {
  if (w.size() != dim_)
    throw argument_error("problem: iterate has dimension " + std::to_string(w.size()) +
                         ", expected " + std::to_string(dim_));
}

void problem::check_batch(index_span idx) const {
  if (idx.empty()) throw argument_error("problem: batch index set is empty");
  for (const index_t i : idx)
    if (i < 0 || i >= n_)
      throw argument_error("problem: batch index " + std::to_string(i) + " out of range");
}

double gram_spectral_norm(const mat& X, int iters) {
  const index_t d = X.cols();
  const double n = static_cast<double>(X.rows());
  // Deterministic start with energy in every coordinate.
  vec v = vec::Ones(d);
  for (index_t i = 0; i < d; ++i) v[i] += 1e-3 * static_cast<double>(i % 7);
  v.normalize();
  double lam = 0.0;
  for (int it = 0; it < iters; ++it) {
    vec u = X.transpose() * (X * v) / n;
    const double norm = u.norm();
    if (norm == 0.0) return 0.0;
    const double next = v.dot(u);
    // The Rayleigh quotient is nondecreasing here; stop once it stalls.
    if (it > 0 && next - lam <= 1e-15 * next) {
      lam = next;
      break;
    }
    lam = next;
    v = u / norm;
  }
  // Callers take 1 / L steps, so err on the high side of the estimate.
  return lam * (1.0 + 1e-9);
}

} // namespace stochkit
