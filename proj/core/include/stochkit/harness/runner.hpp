#pragma once

#include "stochkit/harness/config.hpp"
#include "stochkit/problems/datagen.hpp"
#include "stochkit/record.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stochkit {

struct solver_run {
  std::string name; // output name, deduplicated across repeated roster entries
  solver_spec spec;
  solver_result result;
  bool aborted = false;
  std::string error;                // set when aborted
  std::optional<double> test_score; // held-out accuracy or mse
};

struct experiment_output {
  experiment_config config;
  dataset data;
  problem_ptr prob;
  std::optional<double> f_opt;
  std::optional<vec> w_opt;
  std::vector<solver_run> runs;
};

// Runs every configured solver (concurrently unless any is verbose) without
// touching the filesystem. Throws config_error on an invalid configuration,
// including an empty solver list.
experiment_output run_experiment(const experiment_config& cfg);

// Resolves the config's data source: synthetic generation, or a file load
// with labels adapted to the problem kind ({0,1} binary data becomes -1/+1,
// softmax widens classes to cover the labels seen).
dataset build_dataset(const experiment_config& cfg, index_t& classes);

// Full pipeline: run, then write per-solver CSVs, summary.json, and the
// requested SVG plots under cfg.out_dir. Progress and warnings go to log.
// Returns the process exit code: 0, or 2 when any solver aborted.
int run_experiment_files(const experiment_config& cfg, std::ostream& log);

// The write stage of run_experiment_files, reusable for pre-assembled runs.
int write_outputs(const experiment_output& out, std::ostream& log);

// Fixed v1 CSV schema: a "# schema" comment, a header row, then one row per
// epoch with columns epoch,iter,time_s,grad_calc_count,cost,optgap,gnorm,reg.
// Doubles print as shortest-exact %.17g with Inf/NaN spelled out.
std::string record_csv(const run_record& rec);
run_record record_from_csv(const std::string& text);

std::string summary_json(const experiment_output& out);

} // namespace stochkit
