#pragma once

#include "stochkit/problem.hpp"

#include <cstdint>

namespace stochkit {

struct solution {
  vec w_opt;
  double f_opt;
};

// High-accuracy reference optimum. Smooth problems go through L-BFGS
// (gradient tolerance 1e-10); proximal problems run full proximal gradient
// descent at the fixed step 1 / smooth_lipschitz(). The returned cost is the
// baseline that optimality gaps are measured against.
solution calc_solution(const problem& prob, std::int64_t max_iter = 1000);

} // namespace stochkit
