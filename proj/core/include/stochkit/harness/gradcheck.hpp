#pragma once

#include "stochkit/harness/config.hpp"

#include <string>
#include <vector>

namespace stochkit {

struct gradcheck_report {
  std::string problem;
  int checks = 0;
  double max_grad_rel_err = 0.0;
  double max_hess_vec_err = 0.0;
  bool ok = false;
};

// Central finite differences (h = 1e-6) of an independently built subsample
// objective against grad on random (w, batch) pairs, plus hess_vec against
// the dense hess action. pairs defaults to the standard sweep of 20.
gradcheck_report gradcheck_problem(problem_kind kind, int pairs = 20,
                                   std::uint64_t seed = 1234);

// All six built-ins, or only the named one when filter is nonempty.
std::vector<gradcheck_report> run_gradcheck(const std::string& filter = "");

constexpr double kGradRelTol = 1e-5;
constexpr double kHessVecTol = 1e-10;

} // namespace stochkit
