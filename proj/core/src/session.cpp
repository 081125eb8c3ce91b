#include "stochkit/session.hpp"

#include "stochkit/errors.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace stochkit {

solver_session::solver_session(const problem& prob, solver_options opts, std::string name)
    : prob_(prob),
      opts_(std::move(opts)),
      name_(std::move(name)),
      rng_(opts_.seed),
      aux_rng_(opts_.seed ^ 0x9e3779b97f4a7c15ULL),
      sched_(make_schedule(opts_)),
      t0_(std::chrono::steady_clock::now()) {
  if (opts_.batch_size > prob_.n())
    throw config_error("batch_size: exceeds the number of samples (" +
                       std::to_string(opts_.batch_size) + " > " +
                       std::to_string(prob_.n()) + ")");
  if (opts_.w_init && opts_.w_init->size() != prob_.dim())
    throw config_error("w_init: has dimension " + std::to_string(opts_.w_init->size()) +
                       ", problem expects " + std::to_string(prob_.dim()));
}

vec solver_session::initial_w() const {
  if (opts_.w_init) return *opts_.w_init;
  return vec::Zero(prob_.dim());
}

double solver_session::step_now() const { return eval_stepsize(counters_.iter, sched_); }

double solver_session::elapsed_s() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
}

bool solver_session::record_epoch(const vec& w) {
  counters_.elapsed_s = elapsed_s();
  record_.append(prob_, w, counters_, opts_);
  const std::size_t last = record_.rows() - 1;
  if (opts_.verbose) {
    const double gap = record_.optgap[last];
    if (std::isinf(gap))
      std::printf("%s: Epoch = %03zu, cost = %.16e, optgap = Inf\n", name_.c_str(), last,
                  record_.cost[last]);
    else
      std::printf("%s: Epoch = %03zu, cost = %.16e, optgap = %.16e\n", name_.c_str(), last,
                  record_.cost[last], gap);
  }
  if (!std::isfinite(record_.cost[last])) {
    solver_result partial{name_, w, record_, termination_reason::max_epoch, diagnostics_};
    throw diverged_error(name_ + ": diverged (non-finite cost at epoch " +
                             std::to_string(last) + ")",
                         std::move(partial));
  }
  stop_ = check_stop(record_, opts_);
  return stop_.stop;
}

solver_result solver_session::finish(vec w) {
  if (opts_.verbose) {
    switch (stop_.reason) {
      case termination_reason::max_epoch:
        std::printf("Max epoch reached: max_epoch = %lld\n",
                    static_cast<long long>(opts_.max_epoch));
        break;
      case termination_reason::optgap_tol:
        std::printf("Optimality gap tolerance reached: tol_optgap = %g\n", opts_.tol_optgap);
        break;
      case termination_reason::gnorm_tol:
        std::printf("Gradient norm tolerance reached: tol_gnorm = %g\n", opts_.tol_gnorm);
        break;
    }
  }
  return solver_result{name_, std::move(w), std::move(record_), stop_.reason,
                       std::move(diagnostics_)};
}

std::int64_t solver_session::steps_per_epoch() const {
  return (prob_.n() + opts_.batch_size - 1) / opts_.batch_size;
}

std::vector<index_list> solver_session::epoch_batches() {
  const index_t n = prob_.n();
  const index_t b = opts_.batch_size;
  std::vector<index_list> batches;
  if (opts_.sampling == sampling_mode::permutation) {
    const index_list perm = rng_.permutation(n);
    for (index_t start = 0; start < n; start += b) {
      const index_t stop = std::min<index_t>(start + b, n);
      batches.emplace_back(perm.begin() + start, perm.begin() + stop);
    }
  } else {
    const std::int64_t m = steps_per_epoch();
    batches.reserve(static_cast<std::size_t>(m));
    for (std::int64_t s = 0; s < m; ++s) batches.push_back(rng_.sample_iid(n, b));
  }
  return batches;
}

index_list solver_session::draw_iid_batch(index_t size) { return rng_.sample_iid(prob_.n(), size); }

index_list solver_session::draw_hess_batch(index_t size) {
  return aux_rng_.sample_iid(prob_.n(), size);
}

} // namespace stochkit
