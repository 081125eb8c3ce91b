#pragma once

#include "stochkit/problem.hpp"

namespace stochkit {

// Componentwise sign(w) * max(|w| - thr, 0). thr must be >= 0.
vec soft_threshold(const vec& w, double thr);
double soft_threshold(double w, double thr);

// Wraps a smooth problem with an L1 penalty: cost gains lambda * ||w||_1,
// grad/hess stay those of the smooth part, and prox(w, step) applies
// soft_threshold(w, step * lambda). The base problem must be smooth; build it
// with lambda = 0 unless an L2 term is wanted inside the smooth part.
problem_ptr attach_l1(problem_ptr base, double lambda);

// f(w) = (1/2n) ||Xw - y||^2 + lambda ||w||_1
problem_ptr l1_linear_regression(mat X, vec y, double lambda);

// f(w) = (1/n) sum_i log(1 + exp(-y_i w'x_i)) + lambda ||w||_1
problem_ptr l1_logistic_regression(mat X, vec y, double lambda);

} // namespace stochkit
