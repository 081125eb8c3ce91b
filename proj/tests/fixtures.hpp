#pragma once

#include "stochkit/problems/datagen.hpp"
#include "stochkit/problems/linear_regression.hpp"
#include "stochkit/problems/logistic_regression.hpp"
#include "stochkit/rng.hpp"
#include "stochkit/types.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace testfix {

using stochkit::index_t;
using stochkit::mat;
using stochkit::vec;

struct xy {
  mat X;
  vec y;
};

// Deterministic 2-sample regression data with a hand-checkable geometry.
inline xy tiny_xy() {
  mat X(2, 2);
  X << 1.0, 0.0, 0.0, 2.0;
  vec y(2);
  y << 1.0, 2.0;
  return {X, y};
}

inline xy random_regression(index_t n, index_t d, std::uint64_t seed,
                            double noise = 0.1) {
  stochkit::rng_engine rng(seed);
  mat X(n, d);
  for (index_t i = 0; i < n; ++i) X.row(i) = rng.normal_vec(d).transpose();
  const vec w_true = rng.normal_vec(d);
  vec y = X * w_true;
  for (index_t i = 0; i < n; ++i) y[i] += noise * rng.normal();
  return {X, y};
}

inline xy random_binary(index_t n, index_t d, std::uint64_t seed) {
  stochkit::rng_engine rng(seed);
  mat X(n, d);
  vec y(n);
  for (index_t i = 0; i < n; ++i) {
    const double label = (i % 2 == 0) ? 1.0 : -1.0;
    vec x = rng.normal_vec(d);
    x[0] += 1.5 * label;
    X.row(i) = x.transpose();
    y[i] = label;
  }
  return {X, y};
}

inline xy random_multiclass(index_t n, index_t d, index_t classes, std::uint64_t seed) {
  stochkit::rng_engine rng(seed);
  mat X(n, d);
  vec y(n);
  for (index_t i = 0; i < n; ++i) {
    const index_t label = i % classes;
    vec x = rng.normal_vec(d);
    x[0] += 2.0 * static_cast<double>(label);
    X.row(i) = x.transpose();
    y[i] = static_cast<double>(label);
  }
  return {X, y};
}

// Exact minimizer of (1/2n)||Xw - y||^2 + (lambda/2)||w||^2.
inline vec ridge_optimum(const mat& X, const vec& y, double lambda) {
  const double n = static_cast<double>(X.rows());
  const mat A =
      X.transpose() * X / n + lambda * mat::Identity(X.cols(), X.cols());
  return A.ldlt().solve(X.transpose() * y / n);
}

// Interpolating least-squares data whose Hessian has condition number
// (big_scale)^2: half the rows sit on axis 1 at scale 1, half on axis 2 at
// big_scale, targets noiseless so the optimal cost is exactly zero.
inline xy ill_conditioned(index_t n, double big_scale, std::uint64_t seed) {
  stochkit::rng_engine rng(seed);
  mat X = mat::Zero(n, 2);
  vec y(n);
  const vec w_star = (vec(2) << 1.0, -0.5).finished();
  for (index_t i = 0; i < n; ++i) {
    const double mag = 0.5 + rng.uniform01();
    if (i % 2 == 0)
      X(i, 0) = mag;
    else
      X(i, 1) = mag * big_scale;
    y[i] = X.row(i).dot(w_star);
  }
  return {X, y};
}

} // namespace testfix
