#pragma once

#include "stochkit/problem.hpp"

namespace stochkit {

// Binary logistic regression, labels in {-1, +1}:
//   f(w) = (1/n) sum_i log(1 + exp(-y_i w'x_i)) + (lambda/2) ||w||^2.
problem_ptr logistic_regression(mat X, vec y, double lambda);

} // namespace stochkit
