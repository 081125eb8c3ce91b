#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"
#include "stochkit/rng.hpp"
#include "stochkit/stepsize.hpp"

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace stochkit {

// Per-run bookkeeping shared by every solver: the clock, the RNG stream, the
// iteration/gradient counters, epoch recording, stopping, and verbose output.
// A solver records epoch 0 before doing any work, then alternates inner loop
// and record_epoch until record_epoch reports a stop.
class solver_session {
 public:
  solver_session(const problem& prob, solver_options opts, std::string name);

  const solver_options& opts() const { return opts_; }
  const problem& prob() const { return prob_; }
  const std::string& name() const { return name_; }

  // Start iterate: validated w_init, or zeros.
  vec initial_w() const;

  rng_engine& rng() { return rng_; }

  // Schedule step at the current total inner iteration count.
  double step_now() const;

  void tick(std::int64_t iterations = 1) { counters_.iter += iterations; }
  void add_grad_evals(std::int64_t count) { counters_.grad_calc_count += count; }
  std::int64_t iters() const { return counters_.iter; }
  std::int64_t grad_evals() const { return counters_.grad_calc_count; }

  // Appends a row for the current iterate. Throws diverged_error when the
  // recorded cost is non-finite. Returns true when the run should stop.
  bool record_epoch(const vec& w);

  solver_result finish(vec w);

  std::int64_t steps_per_epoch() const; // ceil(n / batch_size)

  // One epoch worth of batches under opts.sampling: a shuffled permutation
  // split into ceil(n/b) chunks (last one ragged), or ceil(n/b) iid draws of
  // exactly b indices.
  std::vector<index_list> epoch_batches();

  index_list draw_iid_batch(index_t size);

  // Hessian/preconditioner batches come from a second stream so they never
  // shift the gradient-batch sequence of an otherwise identical run.
  index_list draw_hess_batch(index_t size);

  std::map<std::string, std::vector<double>>& diagnostics() { return diagnostics_; }

 private:
  double elapsed_s() const;

  const problem& prob_;
  solver_options opts_;
  std::string name_;
  rng_engine rng_;
  rng_engine aux_rng_;
  step_schedule sched_;
  epoch_counters counters_;
  run_record record_;
  std::map<std::string, std::vector<double>> diagnostics_;
  stop_decision stop_;
  std::chrono::steady_clock::time_point t0_;
};

} // namespace stochkit
