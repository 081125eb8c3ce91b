#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

namespace stochkit {

// SVRG preconditioned by the inverse of a subsampled Hessian taken at each
// snapshot, with eigenvalues floored at sigma (ss_sigma_abs, or ss_sigma_rel
// times the largest eigenvalue) before inversion. When every eigenvalue sits
// at the floor the preconditioner collapses to (1/sigma) I exactly, making
// each update a plain SVRG step scaled by 1/sigma. Smooth objectives only.
solver_result subsamp_svrg(const problem& prob, const options_patch& user = {});

} // namespace stochkit
