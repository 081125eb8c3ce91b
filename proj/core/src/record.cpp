#include "stochkit/record.hpp"

#include <cmath>
#include <limits>

namespace stochkit {

const char* to_string(termination_reason r) {
  switch (r) {
    case termination_reason::max_epoch: return "max_epoch";
    case termination_reason::optgap_tol: return "optgap_tol";
    case termination_reason::gnorm_tol: return "gnorm_tol";
  }
  return "?";
}

termination_reason termination_from_string(const std::string& s) {
  if (s == "max_epoch") return termination_reason::max_epoch;
  if (s == "optgap_tol") return termination_reason::optgap_tol;
  if (s == "gnorm_tol") return termination_reason::gnorm_tol;
  throw config_error("termination_reason: unknown value '" + s + "'");
}

void run_record::append(const problem& prob, const vec& w, const epoch_counters& c,
                        const solver_options& opts) {
  const double f = prob.cost(w);
  const double gn = prob.full_grad(w).norm();
  iter.push_back(c.iter);
  time_s.push_back(c.elapsed_s);
  grad_calc_count.push_back(c.grad_calc_count);
  cost.push_back(f);
  optgap.push_back(opts.f_opt ? f - *opts.f_opt
                              : std::numeric_limits<double>::infinity());
  gnorm.push_back(gn);
  reg.push_back(prob.reg(w));
  if (opts.store_w) w_hist.push_back(w);
}

stop_decision check_stop(const run_record& rec, const solver_options& opts) {
  if (rec.rows() == 0) throw argument_error("check_stop: record is empty");
  const std::size_t last = rec.rows() - 1;
  if (rec.optgap[last] <= opts.tol_optgap)
    return {true, termination_reason::optgap_tol};
  if (rec.gnorm[last] <= opts.tol_gnorm)
    return {true, termination_reason::gnorm_tol};
  if (rec.epochs() >= opts.max_epoch)
    return {true, termination_reason::max_epoch};
  return {false, termination_reason::max_epoch};
}

} // namespace stochkit
