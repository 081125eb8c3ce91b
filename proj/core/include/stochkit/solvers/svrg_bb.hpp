#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

namespace stochkit {

// SVRG with the epoch step chosen by the Barzilai-Borwein ratio of snapshot
// differences: eta_k = |s|^2 / (m s.(mu_k - mu_{k-1})). The first epoch uses
// step_init; any configured schedule beyond that is ignored. Per-epoch steps
// are reported in diagnostics["bb_step"]. Smooth objectives only.
solver_result svrg_bb(const problem& prob, const options_patch& user = {});

} // namespace stochkit
