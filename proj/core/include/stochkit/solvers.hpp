#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"

#include <string>
#include <vector>

namespace stochkit {

// Canonical registry names, in roster order.
const std::vector<std::string>& solver_names();

// Runs the named solver (case-insensitive lookup) with the user options laid
// over the registry entry's variant settings. Unknown names raise
// config_error listing the roster.
solver_result solve(const std::string& name, const problem& prob,
                    const options_patch& user = {});

} // namespace stochkit
