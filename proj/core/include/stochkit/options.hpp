#pragma once

#include "stochkit/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace stochkit {

struct solver_options;

enum class step_alg_kind { fix, decay, decay_2, decay_3, custom };
enum class sampling_mode { permutation, iid };

const char* to_string(step_alg_kind k);
step_alg_kind step_alg_from_string(const std::string& s);
const char* to_string(sampling_mode m);
sampling_mode sampling_from_string(const std::string& s);

// User-supplied schedule hook: (total inner iteration k, merged options) -> step.
using stepsize_fn = std::function<double(std::int64_t, const solver_options&)>;

// Fully resolved options seen by a solver. Field semantics shared across the
// roster; solvers read only what applies to them.
struct solver_options {
  std::int64_t max_epoch = 100;
  std::int64_t batch_size = 10;
  double step_init = 0.1;
  step_alg_kind step_alg = step_alg_kind::fix;
  double step_lambda = 0.1; // decay-schedule lambda, distinct from the problem regularizer
  double tol_optgap = 1e-12;
  double tol_gnorm = 1e-12;
  std::optional<double> f_opt;
  std::string sub_mode; // variant selector within a solver family
  double delta = 0.0;   // quasi-Newton curvature regularization shift
  bool damped = false;  // Powell damping toggle
  std::int64_t mem_size = 10;
  std::int64_t update_period = 10; // steps between curvature-pair refreshes
  bool store_w = false;
  std::uint64_t seed = 0;
  stepsize_fn custom_step;

  double momentum = 0.9;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::optional<double> decay; // second-moment decay; unset = per-variant default
  double sarah_gamma = 0.125;  // early-exit ratio for the SARAH-Plus inner loop
  double bb_theta = 1.0;       // variance-test threshold for batch growth
  double bb_growth = 2.0;
  std::optional<std::int64_t> hess_batch; // Hessian batch size; unset = 2 * batch_size
  double ss_sigma_rel = 1e-6;             // eigenvalue floor, relative to the largest
  std::optional<double> ss_sigma_abs;     // absolute eigenvalue floor override
  sampling_mode sampling = sampling_mode::permutation;
  bool verbose = false;
  std::optional<vec> w_init;
};

// Partial overlay: only set fields take effect when merged.
struct options_patch {
  std::optional<std::int64_t> max_epoch;
  std::optional<std::int64_t> batch_size;
  std::optional<double> step_init;
  std::optional<step_alg_kind> step_alg;
  std::optional<double> step_lambda;
  std::optional<double> tol_optgap;
  std::optional<double> tol_gnorm;
  std::optional<double> f_opt;
  std::optional<std::string> sub_mode;
  std::optional<double> delta;
  std::optional<bool> damped;
  std::optional<std::int64_t> mem_size;
  std::optional<std::int64_t> update_period;
  std::optional<bool> store_w;
  std::optional<std::uint64_t> seed;
  std::optional<stepsize_fn> custom_step;
  std::optional<double> momentum;
  std::optional<double> beta1;
  std::optional<double> beta2;
  std::optional<double> epsilon;
  std::optional<double> decay;
  std::optional<double> sarah_gamma;
  std::optional<double> bb_theta;
  std::optional<double> bb_growth;
  std::optional<std::int64_t> hess_batch;
  std::optional<double> ss_sigma_rel;
  std::optional<double> ss_sigma_abs;
  std::optional<sampling_mode> sampling;
  std::optional<bool> verbose;
  std::optional<vec> w_init;

  void apply_to(solver_options& o) const;

  // Patch setting every field; merging it back over any defaults is a no-op.
  static options_patch from(const solver_options& o);
};

solver_options global_defaults();

// Field-by-field precedence: user > local > global. Validates the result.
solver_options merge_options(const solver_options& global, const options_patch& local,
                             const options_patch& user);

// Patch overlay: fields set in over replace those in base.
options_patch merge_patches(options_patch base, const options_patch& over);

// Throws config_error naming the offending field.
void validate_options(const solver_options& o);

} // namespace stochkit
