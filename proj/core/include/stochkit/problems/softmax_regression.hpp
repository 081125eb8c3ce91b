#pragma once

#include "stochkit/problem.hpp"

namespace stochkit {

// Multinomial logistic regression over C classes, labels in {0, ..., C-1}:
//   f(W) = (1/n) sum_i [logsumexp(W'x_i) - (W'x_i)_{y_i}] + (lambda/2) ||W||_F^2.
// The d x C weight matrix travels through solvers flattened class-major: the
// parameter vector stacks class 0's d weights, then class 1's, and so on.
problem_ptr softmax_regression(mat X, vec y, index_t n_classes, double lambda);

} // namespace stochkit
