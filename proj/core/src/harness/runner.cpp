#include "stochkit/harness/runner.hpp"

#include "stochkit/harness/plots.hpp"
#include "stochkit/problems/calc_solution.hpp"
#include "stochkit/problems/dataset_io.hpp"
#include "stochkit/solvers.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace stochkit {

namespace {

using json = nlohmann::json;

std::string fmt_double(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0.0 ? "Inf" : "-Inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string infer_format(const file_spec& spec) {
  if (!spec.format.empty()) return spec.format;
  const auto dot = spec.path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : spec.path.substr(dot + 1);
  return (ext == "libsvm" || ext == "svm" || ext == "txt") ? "libsvm" : "csv";
}

// Maps raw file labels onto what the problem kind expects: {0,1} binary
// data becomes -1/+1, softmax widens the class count to cover the labels.
void adapt_labels(problem_kind kind, vec& y, index_t& classes) {
  if (kind == problem_kind::logistic_regression || kind == problem_kind::linear_svm ||
      kind == problem_kind::l1_logistic_regression) {
    bool zero_one = true;
    for (index_t i = 0; i < y.size(); ++i)
      zero_one = zero_one && (y(i) == 0.0 || y(i) == 1.0);
    if (zero_one)
      for (index_t i = 0; i < y.size(); ++i) y(i) = y(i) == 0.0 ? -1.0 : 1.0;
  } else if (kind == problem_kind::softmax_regression) {
    const double top = y.size() ? y.maxCoeff() : 0.0;
    classes = std::max<index_t>(classes, static_cast<index_t>(top) + 1);
  }
}

} // namespace

dataset build_dataset(const experiment_config& cfg, index_t& classes) {
  if (cfg.generate) {
    const generate_spec& g = *cfg.generate;
    switch (cfg.problem) {
      case problem_kind::linear_regression:
      case problem_kind::l1_linear_regression:
        return generate_linear_data(g.n, g.d, g.noise_sigma, g.seed);
      case problem_kind::softmax_regression:
        return generate_multiclass_data(g.n, g.d, classes, g.seed);
      default:
        return generate_logistic_data(g.n, g.d, g.seed);
    }
  }
  data_matrix dm = load_data_file(cfg.file->path, infer_format(*cfg.file));
  adapt_labels(cfg.problem, dm.y, classes);
  dataset d;
  d.X_train = std::move(dm.X);
  d.y_train = std::move(dm.y);
  d.n_classes = cfg.problem == problem_kind::softmax_regression ? classes : 0;
  return d;
}

namespace {

std::uint64_t base_seed(const experiment_config& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("STOCHKIT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 0;
}

solver_run run_one(const problem& prob, solver_spec spec, std::string out_name,
                   const options_patch& patch) {
  solver_run run;
  run.name = std::move(out_name);
  run.spec = std::move(spec);
  try {
    run.result = solve(run.spec.name, prob, patch);
  } catch (const diverged_error& e) {
    run.result = e.partial();
    run.aborted = true;
    run.error = e.what();
  } catch (const config_error&) {
    // Unknown names and bad option combinations are configuration mistakes,
    // not runtime aborts; let the caller map them to the usage exit code.
    throw;
  } catch (const std::exception& e) {
    run.aborted = true;
    run.error = e.what();
  }
  return run;
}

} // namespace

experiment_output run_experiment(const experiment_config& cfg) {
  if (cfg.solvers.empty()) throw config_error("solvers: at least one solver is required");
  const bool want_trajectory =
      std::find(cfg.plots.begin(), cfg.plots.end(), plot_kind::trajectory) != cfg.plots.end();

  experiment_output out;
  out.config = cfg;
  index_t classes = cfg.classes;
  out.data = build_dataset(cfg, classes);
  out.prob =
      make_problem(cfg.problem, out.data.X_train, out.data.y_train, cfg.lambda, classes);
  out.config.classes = classes;

  if (want_trajectory && out.prob->dim() != 2)
    throw config_error("plots: trajectory requires parameter dimension 2, problem has " +
                       std::to_string(out.prob->dim()));

  if (cfg.compute_f_opt) {
    const solution sol = calc_solution(*out.prob);
    out.f_opt = sol.f_opt;
    out.w_opt = sol.w_opt;
  }

  const std::uint64_t seed0 = base_seed(cfg);
  std::vector<options_patch> patches;
  std::vector<std::string> names;
  std::set<std::string> taken;
  bool any_verbose = false;
  for (std::size_t i = 0; i < cfg.solvers.size(); ++i) {
    options_patch p = merge_patches(cfg.shared, cfg.solvers[i].options);
    if (!p.seed) p.seed = seed0 + i;
    if (out.f_opt && !p.f_opt) p.f_opt = out.f_opt;
    if (out.data.w_init.size() > 0 && !p.w_init) p.w_init = out.data.w_init;
    if (want_trajectory) p.store_w = true;
    any_verbose = any_verbose || p.verbose.value_or(false);

    std::string name = cfg.solvers[i].name;
    for (int k = 2; taken.contains(name); ++k)
      name = cfg.solvers[i].name + "-" + std::to_string(k);
    taken.insert(name);
    names.push_back(std::move(name));
    patches.push_back(std::move(p));
  }

  if (any_verbose) {
    // Keep verbose transcripts contiguous per solver.
    for (std::size_t i = 0; i < cfg.solvers.size(); ++i)
      out.runs.push_back(run_one(*out.prob, cfg.solvers[i], names[i], patches[i]));
  } else {
    std::vector<std::future<solver_run>> futures;
    futures.reserve(cfg.solvers.size());
    for (std::size_t i = 0; i < cfg.solvers.size(); ++i)
      futures.push_back(std::async(std::launch::async, run_one, std::cref(*out.prob),
                                   cfg.solvers[i], names[i], patches[i]));
    for (auto& f : futures) out.runs.push_back(f.get());
  }

  if (out.data.X_test.rows() > 0)
    for (solver_run& run : out.runs)
      if (!run.aborted)
        run.test_score =
            out.prob->score(run.result.w, out.data.X_test, out.data.y_test).value;
  return out;
}

std::string record_csv(const run_record& rec) {
  std::string out = "# schema: stochkit.record.v1\n";
  out += "epoch,iter,time_s,grad_calc_count,cost,optgap,gnorm,reg\n";
  for (std::size_t e = 0; e < rec.rows(); ++e) {
    out += std::to_string(e) + "," + std::to_string(rec.iter[e]) + "," +
           fmt_double(rec.time_s[e]) + "," + std::to_string(rec.grad_calc_count[e]) + "," +
           fmt_double(rec.cost[e]) + "," + fmt_double(rec.optgap[e]) + "," +
           fmt_double(rec.gnorm[e]) + "," + fmt_double(rec.reg[e]) + "\n";
  }
  return out;
}

run_record record_from_csv(const std::string& text) {
  run_record rec;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "epoch,iter,time_s,grad_calc_count,cost,optgap,gnorm,reg")
        throw data_error("unrecognized record header", line_no);
      header_seen = true;
      continue;
    }
    std::array<std::string, 8> fields;
    std::size_t start = 0;
    std::size_t field = 0;
    for (; field < 8; ++field) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        if (field != 7) break;
        fields[field] = line.substr(start);
        ++field;
        break;
      }
      fields[field] = line.substr(start, comma - start);
      start = comma + 1;
    }
    if (field != 8) throw data_error("record row needs 8 fields", line_no);
    const auto as_ll = [&](const std::string& s) {
      char* end = nullptr;
      const long long v = std::strtoll(s.c_str(), &end, 10);
      if (!end || *end != '\0') throw data_error("bad integer field '" + s + "'", line_no);
      return static_cast<std::int64_t>(v);
    };
    const auto as_d = [&](const std::string& s) {
      char* end = nullptr;
      const double v = std::strtod(s.c_str(), &end);
      if (!end || *end != '\0') throw data_error("bad numeric field '" + s + "'", line_no);
      return v;
    };
    rec.iter.push_back(as_ll(fields[1]));
    rec.time_s.push_back(as_d(fields[2]));
    rec.grad_calc_count.push_back(as_ll(fields[3]));
    rec.cost.push_back(as_d(fields[4]));
    rec.optgap.push_back(as_d(fields[5]));
    rec.gnorm.push_back(as_d(fields[6]));
    rec.reg.push_back(as_d(fields[7]));
  }
  if (!header_seen) throw data_error("record csv has no header", line_no);
  return rec;
}

std::string summary_json(const experiment_output& out) {
  json root;
  root["schema"] = "stochkit.summary.v1";
  root["config"] = json::parse(config_json(out.config));
  root["f_opt"] = out.f_opt ? json(*out.f_opt) : json(nullptr);
  json solvers = json::array();
  for (const solver_run& run : out.runs) {
    json s;
    s["name"] = run.name;
    s["solver"] = run.spec.name;
    s["aborted"] = run.aborted;
    s["error"] = run.aborted ? json(run.error) : json(nullptr);
    if (run.result.record.rows() > 0) {
      const run_record& rec = run.result.record;
      const std::size_t last = rec.rows() - 1;
      s["termination"] = to_string(run.result.reason);
      s["epochs"] = rec.epochs();
      s["grad_calc_count"] = rec.grad_calc_count[last];
      s["final_cost"] = rec.cost[last];
      s["final_gnorm"] = rec.gnorm[last];
      s["final_optgap"] =
          std::isfinite(rec.optgap[last]) ? json(rec.optgap[last]) : json(nullptr);
    }
    if (run.test_score) {
      const char* metric =
          out.prob->score_type() == score_kind::accuracy ? "accuracy" : "mse";
      s["test_metric"] = metric;
      s["test_score"] = *run.test_score;
    }
    solvers.push_back(std::move(s));
  }
  root["solvers"] = std::move(solvers);
  return root.dump(2);
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error("cannot write " + path.string());
  f << content;
}

} // namespace

int run_experiment_files(const experiment_config& cfg, std::ostream& log) {
  return write_outputs(run_experiment(cfg), log);
}

int write_outputs(const experiment_output& out, std::ostream& log) {
  const experiment_config& cfg = out.config;
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);

  for (const solver_run& run : out.runs) {
    write_file(dir / (run.name + ".csv"), record_csv(run.result.record));
    if (run.aborted)
      log << "solver " << run.name << " aborted: " << run.error << "\n";
    else
      log << run.name << ": " << to_string(run.result.reason) << " after "
          << run.result.record.epochs() << " epochs\n";
  }
  write_file(dir / "summary.json", summary_json(out));

  for (const plot_kind kind : cfg.plots) {
    switch (kind) {
      case plot_kind::cost: {
        std::vector<plot_series> series;
        for (const solver_run& run : out.runs) {
          const run_record& rec = run.result.record;
          series.push_back({run.name,
                            std::vector<double>(rec.grad_calc_count.begin(),
                                                rec.grad_calc_count.end()),
                            rec.cost});
        }
        write_file(dir / "cost.svg",
                   line_plot_svg("cost vs gradient evaluations", "grad_calc_count", "cost",
                                 series, true));
        break;
      }
      case plot_kind::optgap: {
        std::vector<plot_series> series;
        bool any = false;
        for (const solver_run& run : out.runs) {
          const run_record& rec = run.result.record;
          plot_series s{run.name,
                        std::vector<double>(rec.grad_calc_count.begin(),
                                            rec.grad_calc_count.end()),
                        rec.optgap};
          for (const double g : s.y) any = any || std::isfinite(g);
          series.push_back(std::move(s));
        }
        if (!any) {
          log << "warning: skipping optgap plot (no reference optimum; optgap is all Inf)\n";
          break;
        }
        write_file(dir / "optgap.svg",
                   line_plot_svg("optimality gap vs gradient evaluations", "grad_calc_count",
                                 "optgap", series, true));
        break;
      }
      case plot_kind::classification: {
        if (!is_classification(cfg.problem)) {
          log << "warning: skipping classification plot (not a classification problem)\n";
          break;
        }
        if (out.data.X_test.rows() == 0 ||
            (out.data.X_test.cols() != 2 && out.data.X_test.cols() != 3)) {
          log << "warning: skipping classification plot (needs a test split with 2 or 3 "
                 "features)\n";
          break;
        }
        std::vector<std::string> names;
        std::vector<vec> finals;
        for (const solver_run& run : out.runs)
          if (!run.aborted) {
            names.push_back(run.name);
            finals.push_back(run.result.w);
          }
        if (names.empty()) {
          log << "warning: skipping classification plot (no finished solver)\n";
          break;
        }
        write_file(dir / "classification.svg",
                   classification_svg(*out.prob, names, finals, out.data.X_test,
                                      out.data.y_test));
        break;
      }
      case plot_kind::trajectory: {
        std::vector<std::string> names;
        std::vector<std::vector<vec>> paths;
        for (const solver_run& run : out.runs)
          if (!run.aborted && !run.result.record.w_hist.empty()) {
            names.push_back(run.name);
            paths.push_back(run.result.record.w_hist);
          }
        if (names.empty()) {
          log << "warning: skipping trajectory plot (no stored iterates)\n";
          break;
        }
        write_file(dir / "trajectory.svg", trajectory_svg(*out.prob, names, paths));
        break;
      }
    }
  }

  for (const solver_run& run : out.runs)
    if (run.aborted) return 2;
  return 0;
}

} // namespace stochkit
