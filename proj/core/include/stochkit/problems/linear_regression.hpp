#pragma once

#include "stochkit/problem.hpp"

namespace stochkit {

// Least squares with an L2 penalty:
//   f(w) = (1/2n) sum_i (w'x_i - y_i)^2 + (lambda/2) ||w||^2.
// X holds one sample per row.
problem_ptr linear_regression(mat X, vec y, double lambda);

} // namespace stochkit
