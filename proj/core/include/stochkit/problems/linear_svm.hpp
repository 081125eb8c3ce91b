#pragma once

#include "stochkit/problem.hpp"

namespace stochkit {

// Smoothed support vector machine with the squared hinge loss, labels {-1, +1}:
//   f(w) = (1/2n) sum_i max(0, 1 - y_i w'x_i)^2 + (lambda/2) ||w||^2.
// The square keeps the loss differentiable at the margin boundary.
problem_ptr linear_svm(mat X, vec y, double lambda);

} // namespace stochkit
