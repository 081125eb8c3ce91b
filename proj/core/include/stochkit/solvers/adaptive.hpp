#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

namespace stochkit {

// Coordinate-wise adaptive steps. sub_mode picks the accumulator:
//   AdaGrad:  v += g.^2              delta = -eta * g ./ (sqrt(v) + eps)
//   RMSProp:  v = b v + (1-b) g.^2   same delta, b defaults to 0.9
//   AdaDelta: parameter-free; the step ratio sqrt(acc_dw + eps)/sqrt(acc_g + eps)
//             replaces eta, b defaults to 0.95
solver_result adagrad_family(const problem& prob, const options_patch& user = {});

// First/second-moment estimates with bias correction (sub_mode Adam), or the
// infinity-norm second moment (sub_mode AdaMax). Local default step 0.01.
solver_result adam_family(const problem& prob, const options_patch& user = {});

} // namespace stochkit
