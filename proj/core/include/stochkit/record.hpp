#pragma once

#include "stochkit/errors.hpp"
#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace stochkit {

enum class termination_reason { max_epoch, optgap_tol, gnorm_tol };

const char* to_string(termination_reason r);
termination_reason termination_from_string(const std::string& s);

// Counters a solver accumulates between epoch records.
struct epoch_counters {
  std::int64_t iter = 0;            // total inner iterations so far
  std::int64_t grad_calc_count = 0; // per-sample gradient-evaluation currency
  double elapsed_s = 0.0;           // wall time since solver entry
};

// Parallel per-epoch arrays; row e describes the iterate after epoch e, with
// row 0 the untouched start point. optgap holds +inf when f_opt is unknown.
struct run_record {
  std::vector<std::int64_t> iter;
  std::vector<double> time_s;
  std::vector<std::int64_t> grad_calc_count;
  std::vector<double> optgap;
  std::vector<double> cost;
  std::vector<double> gnorm;
  std::vector<double> reg;
  std::vector<vec> w_hist; // filled only when store_w

  std::size_t rows() const { return cost.size(); }
  std::int64_t epochs() const { return static_cast<std::int64_t>(rows()) - 1; }

  // Evaluates cost / full-gradient norm / regularizer at w (diagnostics, not
  // charged to grad_calc_count) and appends one row.
  void append(const problem& prob, const vec& w, const epoch_counters& c,
              const solver_options& opts);
};

struct stop_decision {
  bool stop = false;
  termination_reason reason = termination_reason::max_epoch;
};

// Inspects the last row. Tolerance hits take precedence over the epoch budget.
stop_decision check_stop(const run_record& rec, const solver_options& opts);

struct solver_result {
  std::string name;
  vec w;
  run_record record;
  termination_reason reason = termination_reason::max_epoch;
  // Solver-specific per-event series (BB steps, skip counts, batch sizes...).
  std::map<std::string, std::vector<double>> diagnostics;
};

// Raised when a run produces a non-finite cost; carries everything recorded
// up to and including the offending epoch.
class diverged_error : public error {
 public:
  diverged_error(const std::string& msg, solver_result partial)
      : error(msg), partial_(std::move(partial)) {}
  const solver_result& partial() const { return partial_; }

 private:
  solver_result partial_;
};

} // namespace stochkit
