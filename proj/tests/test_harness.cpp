#include "stochkit/errors.hpp"
#include "stochkit/harness/config.hpp"
#include "stochkit/harness/gradcheck.hpp"
#include "stochkit/harness/plots.hpp"
#include "stochkit/harness/runner.hpp"
#include "stochkit/harness/svg.hpp"
#include "stochkit/problems/linear_regression.hpp"
#include "stochkit/solvers.hpp"

#include "fixtures.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace stochkit;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("stochkit_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Drops the time_s column so timing noise cannot break byte comparisons.
std::string strip_time_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') {
      std::size_t c1 = line.find(',');
      std::size_t c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
      std::size_t c3 = c2 == std::string::npos ? c2 : line.find(',', c2 + 1);
      if (c3 != std::string::npos) line = line.substr(0, c2 + 1) + line.substr(c3 + 1);
    }
    out += line + "\n";
  }
  return out;
}

experiment_config tiny_config() {
  experiment_config cfg;
  cfg.problem = problem_kind::logistic_regression;
  cfg.lambda = 0.05;
  generate_spec g;
  g.n = 60;
  g.d = 3;
  g.seed = 42;
  cfg.generate = g;
  solver_spec sgd_spec;
  sgd_spec.name = "SGD";
  sgd_spec.options.step_init = 0.05;
  cfg.solvers.push_back(sgd_spec);
  cfg.shared.max_epoch = 5;
  cfg.shared.batch_size = 10;
  cfg.plots.clear();
  cfg.compute_f_opt = false;
  return cfg;
}

void expect_config_error(const char* text, const char* needle) {
  try {
    (void)parse_config(text);
    FAIL_CHECK("expected config_error for: " << text);
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

} // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("problem_kind and plot_kind: round-trips and rejections") {
  const char* kinds[] = {"linear_regression",    "logistic_regression",
                         "softmax_regression",   "linear_svm",
                         "l1_linear_regression", "l1_logistic_regression"};
  for (const char* k : kinds) CHECK(to_string(problem_kind_from_string(k)) == std::string(k));
  CHECK_THROWS_AS((void)problem_kind_from_string("ridge"), config_error);

  CHECK(is_classification(problem_kind::logistic_regression));
  CHECK(is_classification(problem_kind::softmax_regression));
  CHECK(is_classification(problem_kind::linear_svm));
  CHECK(is_classification(problem_kind::l1_logistic_regression));
  CHECK(!is_classification(problem_kind::linear_regression));
  CHECK(!is_classification(problem_kind::l1_linear_regression));

  const char* plots[] = {"cost", "optgap", "classification", "trajectory"};
  for (const char* p : plots) CHECK(to_string(plot_kind_from_string(p)) == std::string(p));
  CHECK_THROWS_AS((void)plot_kind_from_string("surface"), config_error);
}

TEST_CASE("parse_config: defaults from an empty document") {
  const experiment_config cfg = parse_config("{}");
  CHECK(cfg.problem == problem_kind::logistic_regression);
  CHECK(cfg.lambda == 0.01);
  CHECK(cfg.classes == 3);
  REQUIRE(cfg.generate.has_value());
  CHECK(cfg.generate->n == 300);
  CHECK(cfg.generate->d == 3);
  CHECK(cfg.generate->seed == 42);
  CHECK(cfg.generate->noise_sigma == 0.1);
  CHECK(!cfg.file.has_value());
  CHECK(cfg.solvers.empty());
  CHECK(cfg.out_dir == "out");
  REQUIRE(cfg.plots.size() == 2);
  CHECK(cfg.plots[0] == plot_kind::cost);
  CHECK(cfg.plots[1] == plot_kind::optgap);
  CHECK(cfg.compute_f_opt);
  CHECK(!cfg.seed.has_value());
}

TEST_CASE("parse_config: full document lands in the right fields") {
  const char* text = R"({
    "problem": "softmax_regression",
    "lambda": 0.5,
    "classes": 4,
    "seed": 77,
    "out_dir": "results",
    "compute_f_opt": false,
    "data": {"generate": {"n": 120, "d": 5, "seed": 9, "noise_sigma": 0.3}},
    "options": {"max_epoch": 7, "step_alg": "decay", "step_lambda": 0.25},
    "plots": ["cost", "classification"],
    "solvers": [
      {"name": "SVRG", "options": {"batch_size": 4, "step_init": 0.2}},
      {"name": "Adam", "options": {"w_init": [0.5, -1.0], "damped": false}}
    ]
  })";
  const experiment_config cfg = parse_config(text);
  CHECK(cfg.problem == problem_kind::softmax_regression);
  CHECK(cfg.lambda == 0.5);
  CHECK(cfg.classes == 4);
  REQUIRE(cfg.seed.has_value());
  CHECK(*cfg.seed == 77);
  CHECK(cfg.out_dir == "results");
  CHECK(!cfg.compute_f_opt);
  REQUIRE(cfg.generate.has_value());
  CHECK(cfg.generate->n == 120);
  CHECK(cfg.generate->d == 5);
  CHECK(cfg.generate->seed == 9);
  CHECK(cfg.generate->noise_sigma == 0.3);
  REQUIRE(cfg.shared.max_epoch.has_value());
  CHECK(*cfg.shared.max_epoch == 7);
  CHECK(cfg.shared.step_alg == step_alg_kind::decay);
  CHECK(cfg.shared.step_lambda == 0.25);
  REQUIRE(cfg.plots.size() == 2);
  CHECK(cfg.plots[1] == plot_kind::classification);
  REQUIRE(cfg.solvers.size() == 2);
  CHECK(cfg.solvers[0].name == "SVRG");
  CHECK(cfg.solvers[0].options.batch_size == 4);
  CHECK(cfg.solvers[0].options.step_init == 0.2);
  REQUIRE(cfg.solvers[1].options.w_init.has_value());
  CHECK(cfg.solvers[1].options.w_init->size() == 2);
  CHECK((*cfg.solvers[1].options.w_init)(1) == -1.0);
  CHECK(cfg.solvers[1].options.damped == false);
}

TEST_CASE("parse_config: rejections name the offending key") {
  expect_config_error("not json", "invalid JSON");
  expect_config_error("[1, 2]", "top level");
  expect_config_error(R"({"probl": "linear_svm"})", "probl");
  expect_config_error(R"({"options": {"learning_rate": 0.1}})", "learning_rate");
  expect_config_error(R"({"solvers": [{"name": "SGD", "opts": {}}]})", "opts");
  expect_config_error(R"({"lambda": "high"})", "lambda");
  expect_config_error(R"({"lambda": -0.5})", "lambda");
  expect_config_error(R"({"classes": 1})", "classes");
  expect_config_error(R"({"data": {}})", "data");
  expect_config_error(
      R"({"data": {"generate": {"n": 10}, "file": {"path": "x.csv"}}})", "data");
  expect_config_error(R"({"data": {"generate": {"n": 1}}})", "n");
  expect_config_error(R"({"options": {"w_init": []}})", "w_init");
  expect_config_error(R"({"options": {"w_init": [1, "two"]}})", "w_init");
  expect_config_error(R"({"options": {"max_epoch": 2.5}})", "max_epoch");
  expect_config_error(R"({"plots": ["cost", "heatmap"]})", "heatmap");
  expect_config_error(R"({"solvers": ["SGD"]})", "solvers");
}

TEST_CASE("config_json: parse, emit, reparse is stable") {
  const char* text = R"({
    "problem": "l1_logistic_regression",
    "lambda": 0.2,
    "data": {"file": {"path": "d.csv", "format": "csv"}},
    "solvers": [{"name": "SAGA", "options": {"batch_size": 2}}],
    "options": {"max_epoch": 3},
    "plots": ["cost"]
  })";
  const experiment_config a = parse_config(text);
  const experiment_config b = parse_config(config_json(a));
  CHECK(b.problem == a.problem);
  CHECK(b.lambda == a.lambda);
  REQUIRE(b.file.has_value());
  CHECK(b.file->path == "d.csv");
  REQUIRE(b.solvers.size() == 1);
  CHECK(b.solvers[0].name == "SAGA");
  CHECK(b.solvers[0].options.batch_size == a.solvers[0].options.batch_size);
  CHECK(b.shared.max_epoch == a.shared.max_epoch);
  REQUIRE(b.plots.size() == 1);
  CHECK(b.plots[0] == plot_kind::cost);
  CHECK(b.compute_f_opt == a.compute_f_opt);
}

TEST_CASE("record csv: round-trip preserves every value exactly") {
  run_record rec;
  const double values[][7] = {
      // iter is first; columns: iter, time, gcc, cost, optgap, gnorm, reg
      {0, 0.0, 0, 1.2345678901234567, HUGE_VAL, 0.5, 0.0},
      {12, 0.25, 240, 1e-17, 0.3333333333333333, 6.02e23, 0.125},
  };
  for (const auto& row : values) {
    rec.iter.push_back(static_cast<std::int64_t>(row[0]));
    rec.time_s.push_back(row[1]);
    rec.grad_calc_count.push_back(static_cast<std::int64_t>(row[2]));
    rec.cost.push_back(row[3]);
    rec.optgap.push_back(row[4]);
    rec.gnorm.push_back(row[5]);
    rec.reg.push_back(row[6]);
  }

  const std::string csv = record_csv(rec);
  CHECK(csv.rfind("# schema: stochkit.record.v1\n", 0) == 0);
  CHECK(csv.find("epoch,iter,time_s,grad_calc_count,cost,optgap,gnorm,reg\n") !=
        std::string::npos);
  CHECK(csv.find("Inf") != std::string::npos);

  const run_record back = record_from_csv(csv);
  REQUIRE(back.rows() == rec.rows());
  for (std::size_t e = 0; e < rec.rows(); ++e) {
    CHECK(back.iter[e] == rec.iter[e]);
    CHECK(back.time_s[e] == rec.time_s[e]);
    CHECK(back.grad_calc_count[e] == rec.grad_calc_count[e]);
    CHECK(back.cost[e] == rec.cost[e]);
    CHECK(back.optgap[e] == rec.optgap[e]);
    CHECK(back.gnorm[e] == rec.gnorm[e]);
    CHECK(back.reg[e] == rec.reg[e]);
  }
}

TEST_CASE("record csv: malformed input fails with a line number") {
  CHECK_THROWS_AS((void)record_from_csv(""), data_error);
  CHECK_THROWS_AS((void)record_from_csv("epoch,iter\n"), data_error);

  const std::string head = "epoch,iter,time_s,grad_calc_count,cost,optgap,gnorm,reg\n";
  try {
    (void)record_from_csv(head + "0,0,0,0,1,1,1\n");
    FAIL_CHECK("expected data_error");
  } catch (const data_error& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("8 fields") != std::string::npos);
  }
  CHECK_THROWS_AS((void)record_from_csv(head + "0,zero,0,0,1,1,1,1\n"), data_error);
  CHECK_THROWS_AS((void)record_from_csv(head + "0,0,x,0,1,1,1,1\n"), data_error);
}

TEST_CASE("registry: canonical roster, case-insensitive lookups") {
  const std::vector<std::string> expected = {
      "SGD",       "SGD-CM",    "SGD-CM-NAG",    "AdaGrad",        "RMSProp",
      "AdaDelta",  "Adam",      "AdaMax",        "SVRG",           "SAG",
      "SAGA",      "SARAH",     "SARAH-Plus",    "SVRG-BB",        "BB-SGD",
      "oBFGS-Inf", "oLBFGS-Lim", "Reg-oBFGS-Inf", "Damp-oBFGS-Inf", "SQN",
      "SVRG-SQN",  "SVRG-LBFGS", "SS-SVRG",       "IQN",
  };
  CHECK(solver_names() == expected);

  const auto data = testfix::random_regression(20, 3, 601, 0.1);
  const problem_ptr p = linear_regression(data.X, data.y, 0.1);
  options_patch u;
  u.max_epoch = 1;
  u.batch_size = 5;
  u.step_init = 0.01;
  CHECK(solve("saga", *p, u).name == "SAGA");
  CHECK(solve("ADAM", *p, u).name == "Adam");

  try {
    (void)solve("Newton", *p, u);
    FAIL_CHECK("expected config_error");
  } catch (const config_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("valid names") != std::string::npos);
    CHECK(msg.find("IQN") != std::string::npos);
  }
}

TEST_CASE("run_experiment: dedup, per-solver seeds, f_opt injection, scores") {
  experiment_config cfg = tiny_config();
  cfg.compute_f_opt = true;
  cfg.solvers.push_back(cfg.solvers[0]); // same name twice
  solver_spec adam;
  adam.name = "Adam";
  cfg.solvers.push_back(adam);

  const experiment_output out = run_experiment(cfg);
  REQUIRE(out.runs.size() == 3);
  CHECK(out.runs[0].name == "SGD");
  CHECK(out.runs[1].name == "SGD-2");
  CHECK(out.runs[2].name == "Adam");
  REQUIRE(out.f_opt.has_value());

  // Identical specs, consecutive seeds: the trajectories must differ.
  CHECK(out.runs[0].result.record.cost.back() != out.runs[1].result.record.cost.back());

  for (const solver_run& run : out.runs) {
    CHECK(!run.aborted);
    REQUIRE(run.test_score.has_value()); // synthetic data ships a test split
    CHECK(*run.test_score >= 0.0);
    CHECK(*run.test_score <= 1.0);
    // f_opt flowed into every record: optgap is finite and near-nonnegative.
    const double og = run.result.record.optgap.back();
    CHECK(std::isfinite(og));
    CHECK(og >= -1e-10);
  }
}

TEST_CASE("run_experiment: repeat runs are bit-identical") {
  const experiment_config cfg = tiny_config();
  const experiment_output a = run_experiment(cfg);
  const experiment_output b = run_experiment(cfg);
  REQUIRE(a.runs.size() == b.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    CHECK(strip_time_column(record_csv(a.runs[i].result.record)) ==
          strip_time_column(record_csv(b.runs[i].result.record)));
  }
}

TEST_CASE("run_experiment: seed precedence between config and environment") {
  experiment_config cfg = tiny_config();

  cfg.seed = 999;
  const double explicit_999 = run_experiment(cfg).runs[0].result.record.cost.back();

  cfg.seed.reset();
  REQUIRE(setenv("STOCHKIT_SEED", "999", 1) == 0);
  const double env_999 = run_experiment(cfg).runs[0].result.record.cost.back();
  CHECK(env_999 == explicit_999);

  // An explicit config seed outranks the environment.
  cfg.seed = 5;
  const double explicit_5_with_env = run_experiment(cfg).runs[0].result.record.cost.back();
  REQUIRE(unsetenv("STOCHKIT_SEED") == 0);
  cfg.seed = 5;
  const double explicit_5 = run_experiment(cfg).runs[0].result.record.cost.back();
  CHECK(explicit_5_with_env == explicit_5);
  CHECK(explicit_5 != explicit_999);
}

TEST_CASE("run_experiment: configuration failures propagate as config errors") {
  experiment_config empty = tiny_config();
  empty.solvers.clear();
  CHECK_THROWS_AS((void)run_experiment(empty), config_error);

  experiment_config unknown = tiny_config();
  unknown.solvers[0].name = "Newton";
  CHECK_THROWS_AS((void)run_experiment(unknown), config_error);

  experiment_config traj = tiny_config(); // d = 3, so dim != 2
  traj.plots = {plot_kind::trajectory};
  CHECK_THROWS_AS((void)run_experiment(traj), config_error);

  experiment_config big_batch = tiny_config(); // n = 60
  big_batch.shared.batch_size = 61;
  CHECK_THROWS_AS((void)run_experiment(big_batch), config_error);
}

TEST_CASE("write_outputs: files, summary schema, and exit code") {
  experiment_config cfg = tiny_config();
  cfg.generate->d = 2; // enables classification and trajectory plots
  cfg.compute_f_opt = true;
  cfg.plots = {plot_kind::cost, plot_kind::optgap, plot_kind::classification,
               plot_kind::trajectory};
  const fs::path dir = fresh_dir("outputs");
  cfg.out_dir = dir.string();

  std::ostringstream log;
  const int code = run_experiment_files(cfg, log);
  CHECK(code == 0);
  CHECK(log.str().find("SGD") != std::string::npos);

  const std::string csv = slurp(dir / "SGD.csv");
  const run_record rec = record_from_csv(csv);
  CHECK(rec.rows() == 6); // epoch 0 plus max_epoch = 5

  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(summary.at("schema") == "stochkit.summary.v1");
  CHECK(!summary.at("f_opt").is_null());
  REQUIRE(summary.at("solvers").size() == 1);
  const auto& s0 = summary.at("solvers")[0];
  CHECK(s0.at("name") == "SGD");
  CHECK(s0.at("solver") == "SGD");
  CHECK(s0.at("aborted") == false);
  CHECK(s0.at("termination") == "max_epoch");
  CHECK(s0.at("epochs") == 5);
  CHECK(s0.at("test_metric") == "accuracy");
  CHECK(summary.at("config").at("problem") == "logistic_regression");

  for (const char* name : {"cost.svg", "optgap.svg", "classification.svg", "trajectory.svg"}) {
    const std::string svg = slurp(dir / name);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("write_outputs: aborted runs are recorded and exit 2") {
  experiment_config cfg = tiny_config();
  cfg.problem = problem_kind::linear_regression;
  cfg.solvers[0].options.step_init = 1e10; // guaranteed blow-up
  const fs::path dir = fresh_dir("aborted");
  cfg.out_dir = dir.string();

  std::ostringstream log;
  const int code = run_experiment_files(cfg, log);
  CHECK(code == 2);
  CHECK(log.str().find("aborted") != std::string::npos);

  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  const auto& s0 = summary.at("solvers")[0];
  CHECK(s0.at("aborted") == true);
  CHECK(s0.at("error").is_string());

  // The partial record still round-trips, non-finite cells included.
  const run_record rec = record_from_csv(slurp(dir / "SGD.csv"));
  CHECK(rec.rows() >= 1);
  fs::remove_all(dir);
}

TEST_CASE("svg primitives: escaping and tick labels") {
  CHECK(xml_escape("a<b>&\"c'") == "a&lt;b&gt;&amp;&quot;c&apos;");
  CHECK(tick_label(1e-06) == "1e-06");
  CHECK(tick_label(0.01) == "0.01");
  CHECK(tick_label(3.0) == "3");
  CHECK(tick_label(25000.0) == "2.5e+04");

  svg_doc doc(200, 100);
  doc.text(10, 20, "<&>");
  const std::string s = doc.str();
  CHECK(s.find("&lt;&amp;&gt;") != std::string::npos);
  CHECK(s.find("<&>") == std::string::npos);
}

TEST_CASE("line_plot_svg: one polyline per series, names escaped") {
  std::vector<plot_series> series;
  series.push_back({"alpha", {0, 1, 2, 3}, {1.0, 0.5, 0.25, 0.125}});
  series.push_back({"beta<1>", {0, 1, 2, 3}, {2.0, 0.0, 0.5, -1.0}}); // 0 and -1 dropped
  const std::string svg =
      line_plot_svg("title & more", "evals", "cost", series, true);

  std::size_t count = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1))
    ++count;
  CHECK(count == 2);
  CHECK(svg.find("beta&lt;1&gt;") != std::string::npos);
  CHECK(svg.find("beta<1>") == std::string::npos);
  CHECK(svg.find("title &amp; more") != std::string::npos);
}

TEST_CASE("gradcheck: per-problem report and filters") {
  const gradcheck_report rep =
      gradcheck_problem(problem_kind::linear_regression, 5, 999);
  CHECK(rep.problem == "linear_regression");
  CHECK(rep.checks == 5);
  CHECK(rep.ok);
  CHECK(rep.max_grad_rel_err <= kGradRelTol);
  CHECK(rep.max_hess_vec_err <= kHessVecTol);

  const auto one = run_gradcheck("softmax_regression");
  REQUIRE(one.size() == 1);
  CHECK(one[0].problem == "softmax_regression");

  CHECK_THROWS_AS((void)run_gradcheck("bogus_problem"), config_error);
}

TEST_SUITE_END();
