#include "stochkit/options.hpp"

#include "stochkit/errors.hpp"

#include <cmath>

namespace stochkit {

const char* to_string(step_alg_kind k) {
  switch (k) {
    case step_alg_kind::fix: return "fix";
    case step_alg_kind::decay: return "decay";
    case step_alg_kind::decay_2: return "decay-2";
    case step_alg_kind::decay_3: return "decay-3";
    case step_alg_kind::custom: return "custom";
  }
  return "?";
}

step_alg_kind step_alg_from_string(const std::string& s) {
  if (s == "fix") return step_alg_kind::fix;
  if (s == "decay") return step_alg_kind::decay;
  if (s == "decay-2" || s == "decay_2") return step_alg_kind::decay_2;
  if (s == "decay-3" || s == "decay_3") return step_alg_kind::decay_3;
  if (s == "custom") return step_alg_kind::custom;
  throw config_error("step_alg: unknown schedule '" + s +
                     "' (valid: fix, decay, decay-2, decay-3, custom)");
}

const char* to_string(sampling_mode m) {
  return m == sampling_mode::permutation ? "perm" : "iid";
}

sampling_mode sampling_from_string(const std::string& s) {
  if (s == "perm" || s == "permutation") return sampling_mode::permutation;
  if (s == "iid") return sampling_mode::iid;
  throw config_error("sampling: unknown mode '" + s + "' (valid: perm, iid)");
}

void options_patch::apply_to(solver_options& o) const {
  if (max_epoch) o.max_epoch = *max_epoch;
  if (batch_size) o.batch_size = *batch_size;
  if (step_init) o.step_init = *step_init;
  if (step_alg) o.step_alg = *step_alg;
  if (step_lambda) o.step_lambda = *step_lambda;
  if (tol_optgap) o.tol_optgap = *tol_optgap;
  if (tol_gnorm) o.tol_gnorm = *tol_gnorm;
  if (f_opt) o.f_opt = *f_opt;
  if (sub_mode) o.sub_mode = *sub_mode;
  if (delta) o.delta = *delta;
  if (damped) o.damped = *damped;
  if (mem_size) o.mem_size = *mem_size;
  if (update_period) o.update_period = *update_period;
  if (store_w) o.store_w = *store_w;
  if (seed) o.seed = *seed;
  if (custom_step) o.custom_step = *custom_step;
  if (momentum) o.momentum = *momentum;
  if (beta1) o.beta1 = *beta1;
  if (beta2) o.beta2 = *beta2;
  if (epsilon) o.epsilon = *epsilon;
  if (decay) o.decay = *decay;
  if (sarah_gamma) o.sarah_gamma = *sarah_gamma;
  if (bb_theta) o.bb_theta = *bb_theta;
  if (bb_growth) o.bb_growth = *bb_growth;
  if (hess_batch) o.hess_batch = *hess_batch;
  if (ss_sigma_rel) o.ss_sigma_rel = *ss_sigma_rel;
  if (ss_sigma_abs) o.ss_sigma_abs = *ss_sigma_abs;
  if (sampling) o.sampling = *sampling;
  if (verbose) o.verbose = *verbose;
  if (w_init) o.w_init = *w_init;
}

options_patch options_patch::from(const solver_options& o) {
  options_patch p;
  p.max_epoch = o.max_epoch;
  p.batch_size = o.batch_size;
  p.step_init = o.step_init;
  p.step_alg = o.step_alg;
  p.step_lambda = o.step_lambda;
  p.tol_optgap = o.tol_optgap;
  p.tol_gnorm = o.tol_gnorm;
  if (o.f_opt) p.f_opt = o.f_opt;
  p.sub_mode = o.sub_mode;
  p.delta = o.delta;
  p.damped = o.damped;
  p.mem_size = o.mem_size;
  p.update_period = o.update_period;
  p.store_w = o.store_w;
  p.seed = o.seed;
  if (o.custom_step) p.custom_step = o.custom_step;
  p.momentum = o.momentum;
  p.beta1 = o.beta1;
  p.beta2 = o.beta2;
  p.epsilon = o.epsilon;
  if (o.decay) p.decay = o.decay;
  p.sarah_gamma = o.sarah_gamma;
  p.bb_theta = o.bb_theta;
  p.bb_growth = o.bb_growth;
  if (o.hess_batch) p.hess_batch = o.hess_batch;
  p.ss_sigma_rel = o.ss_sigma_rel;
  if (o.ss_sigma_abs) p.ss_sigma_abs = o.ss_sigma_abs;
  p.sampling = o.sampling;
  p.verbose = o.verbose;
  if (o.w_init) p.w_init = o.w_init;
  return p;
}

solver_options global_defaults() { return solver_options{}; }

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw config_error(msg);
}

} // namespace

void validate_options(const solver_options& o) {
  require(o.max_epoch >= 1, "max_epoch: must be >= 1");
  require(o.batch_size >= 1, "batch_size: must be >= 1");
  require(std::isfinite(o.step_init) && o.step_init > 0.0, "step_init: must be positive");
  require(std::isfinite(o.step_lambda) && o.step_lambda >= 0.0, "step_lambda: must be >= 0");
  require(o.tol_optgap >= 0.0, "tol_optgap: must be >= 0");
  require(o.tol_gnorm >= 0.0, "tol_gnorm: must be >= 0");
  require(o.delta >= 0.0, "delta: must be >= 0");
  require(o.mem_size >= 1, "mem_size: must be >= 1");
  require(o.update_period >= 1, "update_period: must be >= 1");
  require(o.momentum >= 0.0 && o.momentum < 1.0, "momentum: must lie in [0, 1)");
  require(o.beta1 >= 0.0 && o.beta1 < 1.0, "beta1: must lie in [0, 1)");
  require(o.beta2 >= 0.0 && o.beta2 < 1.0, "beta2: must lie in [0, 1)");
  require(o.epsilon > 0.0, "epsilon: must be positive");
  if (o.decay) require(*o.decay >= 0.0 && *o.decay < 1.0, "decay: must lie in [0, 1)");
  require(o.sarah_gamma > 0.0 && o.sarah_gamma <= 1.0, "sarah_gamma: must lie in (0, 1]");
  require(o.bb_theta > 0.0, "bb_theta: must be positive");
  require(o.bb_growth > 1.0, "bb_growth: must be > 1");
  if (o.hess_batch) require(*o.hess_batch >= 1, "hess_batch: must be >= 1");
  require(o.ss_sigma_rel > 0.0, "ss_sigma_rel: must be positive");
  if (o.ss_sigma_abs) require(*o.ss_sigma_abs > 0.0, "ss_sigma_abs: must be positive");
  if (o.step_alg == step_alg_kind::custom)
    require(static_cast<bool>(o.custom_step), "custom_step: required when step_alg is custom");
}

solver_options merge_options(const solver_options& global, const options_patch& local,
                             const options_patch& user) {
  solver_options out = global;
  local.apply_to(out);
  user.apply_to(out);
  validate_options(out);
  return out;
}

options_patch merge_patches(options_patch base, const options_patch& over) {
  if (over.max_epoch) base.max_epoch = over.max_epoch;
  if (over.batch_size) base.batch_size = over.batch_size;
  if (over.step_init) base.step_init = over.step_init;
  if (over.step_alg) base.step_alg = over.step_alg;
  if (over.step_lambda) base.step_lambda = over.step_lambda;
  if (over.tol_optgap) base.tol_optgap = over.tol_optgap;
  if (over.tol_gnorm) base.tol_gnorm = over.tol_gnorm;
  if (over.f_opt) base.f_opt = over.f_opt;
  if (over.sub_mode) base.sub_mode = over.sub_mode;
  if (over.delta) base.delta = over.delta;
  if (over.damped) base.damped = over.damped;
  if (over.mem_size) base.mem_size = over.mem_size;
  if (over.update_period) base.update_period = over.update_period;
  if (over.store_w) base.store_w = over.store_w;
  if (over.seed) base.seed = over.seed;
  if (over.custom_step) base.custom_step = over.custom_step;
  if (over.momentum) base.momentum = over.momentum;
  if (over.beta1) base.beta1 = over.beta1;
  if (over.beta2) base.beta2 = over.beta2;
  if (over.epsilon) base.epsilon = over.epsilon;
  if (over.decay) base.decay = over.decay;
  if (over.sarah_gamma) base.sarah_gamma = over.sarah_gamma;
  if (over.bb_theta) base.bb_theta = over.bb_theta;
  if (over.bb_growth) base.bb_growth = over.bb_growth;
  if (over.hess_batch) base.hess_batch = over.hess_batch;
  if (over.ss_sigma_rel) base.ss_sigma_rel = over.ss_sigma_rel;
  if (over.ss_sigma_abs) base.ss_sigma_abs = over.ss_sigma_abs;
  if (over.sampling) base.sampling = over.sampling;
  if (over.verbose) base.verbose = over.verbose;
  if (over.w_init) base.w_init = over.w_init;
  return base;
}

} // namespace stochkit
