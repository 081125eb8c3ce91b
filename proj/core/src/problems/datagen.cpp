#include "stochkit/problems/datagen.hpp"

#include "stochkit/errors.hpp"
#include "stochkit/rng.hpp"

#include <cmath>
#include <numbers>

namespace stochkit {

namespace {

void check_sizes(index_t n, index_t d) {
  if (n < 5) throw argument_error("generate: need n >= 5 for a nonempty split");
  if (d < 1) throw argument_error("generate: need d >= 1");
}

// Shuffled 80/20 split; both sides nonempty for n >= 5.
void split(rng_engine& rng, const mat& X, const vec& y, dataset& out) {
  const index_t n = X.rows();
  const index_t n_test = n / 5;
  const index_t n_train = n - n_test;
  const index_list perm = rng.permutation(n);
  out.X_train.resize(n_train, X.cols());
  out.y_train.resize(n_train);
  out.X_test.resize(n_test, X.cols());
  out.y_test.resize(n_test);
  for (index_t i = 0; i < n_train; ++i) {
    out.X_train.row(i) = X.row(perm[static_cast<std::size_t>(i)]);
    out.y_train[i] = y[perm[static_cast<std::size_t>(i)]];
  }
  for (index_t i = 0; i < n_test; ++i) {
    out.X_test.row(i) = X.row(perm[static_cast<std::size_t>(n_train + i)]);
    out.y_test[i] = y[perm[static_cast<std::size_t>(n_train + i)]];
  }
}

} // namespace

dataset generate_logistic_data(index_t n, index_t d, std::uint64_t seed) {
  check_sizes(n, d);
  rng_engine rng(seed);
  const vec mu = vec::Constant(d, 2.0 / std::sqrt(static_cast<double>(d)));
  mat X(n, d);
  vec y(n);
  for (index_t i = 0; i < n; ++i) {
    y[i] = (i % 2 == 0) ? 1.0 : -1.0;
    X.row(i) = (y[i] * mu + rng.normal_vec(d)).transpose();
  }
  dataset out;
  split(rng, X, y, out);
  out.w_init = 10.0 * rng.normal_vec(d);
  return out;
}

dataset generate_linear_data(index_t n, index_t d, double noise_sigma, std::uint64_t seed) {
  check_sizes(n, d);
  if (noise_sigma < 0.0) throw argument_error("generate: noise_sigma must be >= 0");
  rng_engine rng(seed);
  const vec w_true = rng.normal_vec(d);
  mat X(n, d);
  vec y(n);
  for (index_t i = 0; i < n; ++i) {
    X.row(i) = rng.normal_vec(d).transpose();
    y[i] = X.row(i).dot(w_true) + noise_sigma * rng.normal();
  }
  dataset out;
  split(rng, X, y, out);
  out.w_init = rng.normal_vec(d);
  out.w_true = w_true;
  return out;
}

dataset generate_multiclass_data(index_t n, index_t d, index_t n_classes, std::uint64_t seed) {
  check_sizes(n, d);
  if (n_classes < 2) throw argument_error("generate: need n_classes >= 2");
  if (n < n_classes) throw argument_error("generate: need n >= n_classes");
  rng_engine rng(seed);
  mat means = mat::Zero(n_classes, d);
  for (index_t c = 0; c < n_classes; ++c) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(c) /
                         static_cast<double>(n_classes);
    means(c, 0) = 2.0 * std::cos(angle);
    if (d > 1) means(c, 1) = 2.0 * std::sin(angle);
  }
  mat X(n, d);
  vec y(n);
  for (index_t i = 0; i < n; ++i) {
    const index_t c = i % n_classes;
    y[i] = static_cast<double>(c);
    X.row(i) = (means.row(c).transpose() + rng.normal_vec(d)).transpose();
  }
  dataset out;
  split(rng, X, y, out);
  out.w_init = rng.normal_vec(d * n_classes);
  out.n_classes = n_classes;
  return out;
}

} // namespace stochkit
