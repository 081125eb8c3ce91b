#pragma once

#include "stochkit/types.hpp"

#include <cstdint>
#include <optional>

namespace stochkit {

// Train/test split plus the generated start point. Generators fill w_true
// when a planted parameter exists.
struct dataset {
  mat X_train;
  vec y_train;
  mat X_test;
  vec y_test;
  vec w_init;
  std::optional<vec> w_true;
  index_t n_classes = 0; // set for multiclass data

  index_t n_train() const { return X_train.rows(); }
  index_t d() const { return X_train.cols(); }
};

// Two unit-covariance Gaussian clusters with means +/- mu, mu = (2/sqrt(d)) 1,
// labels +/- 1 balanced, shuffled 80/20 train/test split. w_init ~ N(0, 10^2 I):
// the wide start makes a run's initial cost sit orders of magnitude above its
// floor, matching the reference demo's shape.
dataset generate_logistic_data(index_t n, index_t d, std::uint64_t seed);

// y = w_true'x + noise_sigma * eps with x, w_true, eps standard normal;
// 80/20 split, w_init ~ N(0, I).
dataset generate_linear_data(index_t n, index_t d, double noise_sigma, std::uint64_t seed);

// C unit-covariance clusters with means of norm 2 spread on the first-two-axes
// circle, labels 0..C-1 round-robin, 80/20 split, w_init ~ N(0, I) of size d*C.
dataset generate_multiclass_data(index_t n, index_t d, index_t n_classes, std::uint64_t seed);

} // namespace stochkit
