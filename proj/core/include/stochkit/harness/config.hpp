#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stochkit {

enum class problem_kind {
  linear_regression,
  logistic_regression,
  softmax_regression,
  linear_svm,
  l1_linear_regression,
  l1_logistic_regression,
};

const char* to_string(problem_kind k);
problem_kind problem_kind_from_string(const std::string& s);
bool is_classification(problem_kind k);

// Synthetic data request. noise_sigma only affects regression targets.
struct generate_spec {
  std::int64_t n = 300;
  index_t d = 3;
  std::uint64_t seed = 42;
  double noise_sigma = 0.1;
};

struct file_spec {
  std::string path;
  std::string format; // "csv", "libsvm", or empty to infer from the extension
};

struct solver_spec {
  std::string name;
  options_patch options;
};

enum class plot_kind { cost, optgap, classification, trajectory };

const char* to_string(plot_kind k);
plot_kind plot_kind_from_string(const std::string& s);

// One experiment: a problem over one data source, a solver roster, shared
// option overrides, and the output selection. Parsed from a JSON document;
// unknown keys anywhere are config errors.
struct experiment_config {
  problem_kind problem = problem_kind::logistic_regression;
  double lambda = 0.01;
  index_t classes = 3; // softmax only; file data may widen it
  std::optional<generate_spec> generate;
  std::optional<file_spec> file;
  std::vector<solver_spec> solvers;
  options_patch shared;
  std::string out_dir = "out";
  std::vector<plot_kind> plots{plot_kind::cost, plot_kind::optgap};
  bool compute_f_opt = true;
  std::optional<std::uint64_t> seed;
};

experiment_config parse_config(const std::string& json_text);
experiment_config load_config(const std::string& path);

// Round-trip used for the summary's config echo.
std::string config_json(const experiment_config& cfg);

// Builds the descriptor for a kind over concrete data. classes only matters
// for softmax. Label constraints are enforced by the problem constructors.
problem_ptr make_problem(problem_kind kind, mat X, vec y, double lambda, index_t classes = 0);

} // namespace stochkit
