#pragma once

#include "stochkit/problem.hpp"

namespace stochkit {

// Held-out evaluation at w: accuracy for classifiers, mean squared error for
// regression. Shape mismatches and empty test sets raise argument_error.
score_report predict_and_score(const problem& prob, const vec& w, const mat& X_test,
                               const vec& y_test);

} // namespace stochkit
