#include "stochkit/harness/config.hpp"

#include "stochkit/errors.hpp"
#include "stochkit/problems/l1.hpp"
#include "stochkit/problems/linear_regression.hpp"
#include "stochkit/problems/linear_svm.hpp"
#include "stochkit/problems/logistic_regression.hpp"
#include "stochkit/problems/softmax_regression.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace stochkit {

using json = nlohmann::json;

const char* to_string(problem_kind k) {
  switch (k) {
    case problem_kind::linear_regression: return "linear_regression";
    case problem_kind::logistic_regression: return "logistic_regression";
    case problem_kind::softmax_regression: return "softmax_regression";
    case problem_kind::linear_svm: return "linear_svm";
    case problem_kind::l1_linear_regression: return "l1_linear_regression";
    case problem_kind::l1_logistic_regression: return "l1_logistic_regression";
  }
  return "?";
}

problem_kind problem_kind_from_string(const std::string& s) {
  if (s == "linear_regression") return problem_kind::linear_regression;
  if (s == "logistic_regression") return problem_kind::logistic_regression;
  if (s == "softmax_regression") return problem_kind::softmax_regression;
  if (s == "linear_svm") return problem_kind::linear_svm;
  if (s == "l1_linear_regression") return problem_kind::l1_linear_regression;
  if (s == "l1_logistic_regression") return problem_kind::l1_logistic_regression;
  throw config_error("problem: unknown kind '" + s +
                     "' (valid: linear_regression, logistic_regression, softmax_regression, "
                     "linear_svm, l1_linear_regression, l1_logistic_regression)");
}

bool is_classification(problem_kind k) {
  return k == problem_kind::logistic_regression || k == problem_kind::softmax_regression ||
         k == problem_kind::linear_svm || k == problem_kind::l1_logistic_regression;
}

const char* to_string(plot_kind k) {
  switch (k) {
    case plot_kind::cost: return "cost";
    case plot_kind::optgap: return "optgap";
    case plot_kind::classification: return "classification";
    case plot_kind::trajectory: return "trajectory";
  }
  return "?";
}

plot_kind plot_kind_from_string(const std::string& s) {
  if (s == "cost") return plot_kind::cost;
  if (s == "optgap") return plot_kind::optgap;
  if (s == "classification") return plot_kind::classification;
  if (s == "trajectory") return plot_kind::trajectory;
  throw config_error("plots: unknown kind '" + s +
                     "' (valid: cost, optgap, classification, trajectory)");
}

namespace {

void check_keys(const json& obj, const char* where, const std::set<std::string>& allowed) {
  for (const auto& item : obj.items())
    if (!allowed.contains(item.key()))
      throw config_error(std::string(where) + ": unknown key '" + item.key() + "'");
}

[[noreturn]] void type_fail(const char* where, const std::string& key, const char* want) {
  throw config_error(std::string(where) + "." + key + ": expected " + want);
}

double as_double(const json& obj, const char* where, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_number()) type_fail(where, key, "a number");
  return v.get<double>();
}

std::int64_t as_int(const json& obj, const char* where, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) type_fail(where, key, "an integer");
  return v.get<std::int64_t>();
}

std::uint64_t as_uint(const json& obj, const char* where, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    type_fail(where, key, "a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::string as_string(const json& obj, const char* where, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_string()) type_fail(where, key, "a string");
  return v.get<std::string>();
}

bool as_bool(const json& obj, const char* where, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_boolean()) type_fail(where, key, "a boolean");
  return v.get<bool>();
}

options_patch parse_patch(const json& obj, const char* where) {
  static const std::set<std::string> keys = {
      "max_epoch", "batch_size",  "step_init",   "step_alg",   "step_lambda",
      "tol_optgap", "tol_gnorm",  "f_opt",       "sub_mode",   "delta",
      "damped",     "mem_size",   "update_period", "store_w",  "seed",
      "momentum",   "beta1",      "beta2",       "epsilon",    "decay",
      "sarah_gamma", "bb_theta",  "bb_growth",   "hess_batch", "ss_sigma_rel",
      "ss_sigma_abs", "sampling", "verbose",     "w_init"};
  if (!obj.is_object()) throw config_error(std::string(where) + ": expected an object");
  check_keys(obj, where, keys);

  options_patch p;
  if (obj.contains("max_epoch")) p.max_epoch = as_int(obj, where, "max_epoch");
  if (obj.contains("batch_size")) p.batch_size = as_int(obj, where, "batch_size");
  if (obj.contains("step_init")) p.step_init = as_double(obj, where, "step_init");
  if (obj.contains("step_alg"))
    p.step_alg = step_alg_from_string(as_string(obj, where, "step_alg"));
  if (obj.contains("step_lambda")) p.step_lambda = as_double(obj, where, "step_lambda");
  if (obj.contains("tol_optgap")) p.tol_optgap = as_double(obj, where, "tol_optgap");
  if (obj.contains("tol_gnorm")) p.tol_gnorm = as_double(obj, where, "tol_gnorm");
  if (obj.contains("f_opt")) p.f_opt = as_double(obj, where, "f_opt");
  if (obj.contains("sub_mode")) p.sub_mode = as_string(obj, where, "sub_mode");
  if (obj.contains("delta")) p.delta = as_double(obj, where, "delta");
  if (obj.contains("damped")) p.damped = as_bool(obj, where, "damped");
  if (obj.contains("mem_size")) p.mem_size = as_int(obj, where, "mem_size");
  if (obj.contains("update_period")) p.update_period = as_int(obj, where, "update_period");
  if (obj.contains("store_w")) p.store_w = as_bool(obj, where, "store_w");
  if (obj.contains("seed")) p.seed = as_uint(obj, where, "seed");
  if (obj.contains("momentum")) p.momentum = as_double(obj, where, "momentum");
  if (obj.contains("beta1")) p.beta1 = as_double(obj, where, "beta1");
  if (obj.contains("beta2")) p.beta2 = as_double(obj, where, "beta2");
  if (obj.contains("epsilon")) p.epsilon = as_double(obj, where, "epsilon");
  if (obj.contains("decay")) p.decay = as_double(obj, where, "decay");
  if (obj.contains("sarah_gamma")) p.sarah_gamma = as_double(obj, where, "sarah_gamma");
  if (obj.contains("bb_theta")) p.bb_theta = as_double(obj, where, "bb_theta");
  if (obj.contains("bb_growth")) p.bb_growth = as_double(obj, where, "bb_growth");
  if (obj.contains("hess_batch")) p.hess_batch = as_int(obj, where, "hess_batch");
  if (obj.contains("ss_sigma_rel")) p.ss_sigma_rel = as_double(obj, where, "ss_sigma_rel");
  if (obj.contains("ss_sigma_abs")) p.ss_sigma_abs = as_double(obj, where, "ss_sigma_abs");
  if (obj.contains("sampling"))
    p.sampling = sampling_from_string(as_string(obj, where, "sampling"));
  if (obj.contains("verbose")) p.verbose = as_bool(obj, where, "verbose");
  if (obj.contains("w_init")) {
    const json& v = obj.at("w_init");
    if (!v.is_array() || v.empty()) type_fail(where, "w_init", "a non-empty array of numbers");
    vec w(static_cast<index_t>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) type_fail(where, "w_init", "a non-empty array of numbers");
      w(static_cast<index_t>(i)) = v[i].get<double>();
    }
    p.w_init = std::move(w);
  }
  return p;
}

json patch_json(const options_patch& p) {
  json o = json::object();
  if (p.max_epoch) o["max_epoch"] = *p.max_epoch;
  if (p.batch_size) o["batch_size"] = *p.batch_size;
  if (p.step_init) o["step_init"] = *p.step_init;
  if (p.step_alg) o["step_alg"] = to_string(*p.step_alg);
  if (p.step_lambda) o["step_lambda"] = *p.step_lambda;
  if (p.tol_optgap) o["tol_optgap"] = *p.tol_optgap;
  if (p.tol_gnorm) o["tol_gnorm"] = *p.tol_gnorm;
  if (p.f_opt) o["f_opt"] = *p.f_opt;
  if (p.sub_mode) o["sub_mode"] = *p.sub_mode;
  if (p.delta) o["delta"] = *p.delta;
  if (p.damped) o["damped"] = *p.damped;
  if (p.mem_size) o["mem_size"] = *p.mem_size;
  if (p.update_period) o["update_period"] = *p.update_period;
  if (p.store_w) o["store_w"] = *p.store_w;
  if (p.seed) o["seed"] = *p.seed;
  if (p.momentum) o["momentum"] = *p.momentum;
  if (p.beta1) o["beta1"] = *p.beta1;
  if (p.beta2) o["beta2"] = *p.beta2;
  if (p.epsilon) o["epsilon"] = *p.epsilon;
  if (p.decay) o["decay"] = *p.decay;
  if (p.sarah_gamma) o["sarah_gamma"] = *p.sarah_gamma;
  if (p.bb_theta) o["bb_theta"] = *p.bb_theta;
  if (p.bb_growth) o["bb_growth"] = *p.bb_growth;
  if (p.hess_batch) o["hess_batch"] = *p.hess_batch;
  if (p.ss_sigma_rel) o["ss_sigma_rel"] = *p.ss_sigma_rel;
  if (p.ss_sigma_abs) o["ss_sigma_abs"] = *p.ss_sigma_abs;
  if (p.sampling) o["sampling"] = to_string(*p.sampling);
  if (p.verbose) o["verbose"] = *p.verbose;
  if (p.w_init) {
    json arr = json::array();
    for (index_t i = 0; i < p.w_init->size(); ++i) arr.push_back((*p.w_init)(i));
    o["w_init"] = std::move(arr);
  }
  return o;
}

} // namespace

experiment_config parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw config_error("config: top level must be an object");
  check_keys(root, "config",
             {"problem", "lambda", "classes", "data", "solvers", "options", "out_dir", "plots",
              "compute_f_opt", "seed"});

  experiment_config cfg;
  if (root.contains("problem"))
    cfg.problem = problem_kind_from_string(as_string(root, "config", "problem"));
  if (root.contains("lambda")) cfg.lambda = as_double(root, "config", "lambda");
  if (root.contains("classes")) cfg.classes = as_int(root, "config", "classes");
  if (root.contains("seed")) cfg.seed = as_uint(root, "config", "seed");
  if (root.contains("out_dir")) cfg.out_dir = as_string(root, "config", "out_dir");
  if (root.contains("compute_f_opt"))
    cfg.compute_f_opt = as_bool(root, "config", "compute_f_opt");

  if (root.contains("data")) {
    const json& data = root.at("data");
    if (!data.is_object()) throw config_error("data: expected an object");
    check_keys(data, "data", {"generate", "file"});
    if (data.contains("generate") == data.contains("file"))
      throw config_error("data: exactly one of 'generate' or 'file' is required");
    if (data.contains("generate")) {
      const json& g = data.at("generate");
      if (!g.is_object()) throw config_error("data.generate: expected an object");
      check_keys(g, "data.generate", {"n", "d", "seed", "noise_sigma"});
      generate_spec spec;
      if (g.contains("n")) spec.n = as_int(g, "data.generate", "n");
      if (g.contains("d")) spec.d = as_int(g, "data.generate", "d");
      if (g.contains("seed")) spec.seed = as_uint(g, "data.generate", "seed");
      if (g.contains("noise_sigma"))
        spec.noise_sigma = as_double(g, "data.generate", "noise_sigma");
      if (spec.n < 2) throw config_error("data.generate.n: must be >= 2");
      if (spec.d < 1) throw config_error("data.generate.d: must be >= 1");
      cfg.generate = spec;
    } else {
      const json& f = data.at("file");
      if (!f.is_object()) throw config_error("data.file: expected an object");
      check_keys(f, "data.file", {"path", "format"});
      file_spec spec;
      spec.path = as_string(f, "data.file", "path");
      if (f.contains("format")) spec.format = as_string(f, "data.file", "format");
      cfg.file = spec;
    }
  } else {
    cfg.generate = generate_spec{};
  }

  if (root.contains("solvers")) {
    const json& solvers = root.at("solvers");
    if (!solvers.is_array()) throw config_error("solvers: expected an array");
    for (const json& s : solvers) {
      if (!s.is_object()) throw config_error("solvers[]: expected objects");
      check_keys(s, "solvers[]", {"name", "options"});
      solver_spec spec;
      spec.name = as_string(s, "solvers[]", "name");
      if (s.contains("options")) spec.options = parse_patch(s.at("options"), "solvers[].options");
      cfg.solvers.push_back(std::move(spec));
    }
  }

  if (root.contains("options")) cfg.shared = parse_patch(root.at("options"), "options");

  if (root.contains("plots")) {
    const json& plots = root.at("plots");
    if (!plots.is_array()) throw config_error("plots: expected an array of strings");
    cfg.plots.clear();
    for (const json& p : plots) {
      if (!p.is_string()) throw config_error("plots: expected an array of strings");
      cfg.plots.push_back(plot_kind_from_string(p.get<std::string>()));
    }
  }

  if (cfg.lambda < 0.0) throw config_error("lambda: must be >= 0");
  if (cfg.classes < 2) throw config_error("classes: must be >= 2");
  return cfg;
}

experiment_config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_json(const experiment_config& cfg) {
  json root;
  root["problem"] = to_string(cfg.problem);
  root["lambda"] = cfg.lambda;
  if (cfg.problem == problem_kind::softmax_regression) root["classes"] = cfg.classes;
  if (cfg.generate) {
    root["data"]["generate"] = {{"n", cfg.generate->n},
                                {"d", cfg.generate->d},
                                {"seed", cfg.generate->seed},
                                {"noise_sigma", cfg.generate->noise_sigma}};
  } else if (cfg.file) {
    root["data"]["file"] = {{"path", cfg.file->path}, {"format", cfg.file->format}};
  }
  json solvers = json::array();
  for (const auto& s : cfg.solvers)
    solvers.push_back({{"name", s.name}, {"options", patch_json(s.options)}});
  root["solvers"] = std::move(solvers);
  root["options"] = patch_json(cfg.shared);
  root["out_dir"] = cfg.out_dir;
  json plots = json::array();
  for (const plot_kind p : cfg.plots) plots.push_back(to_string(p));
  root["plots"] = std::move(plots);
  root["compute_f_opt"] = cfg.compute_f_opt;
  if (cfg.seed) root["seed"] = *cfg.seed;
  return root.dump(2);
}

problem_ptr make_problem(problem_kind kind, mat X, vec y, double lambda, index_t classes) {
  switch (kind) {
    case problem_kind::linear_regression:
      return linear_regression(std::move(X), std::move(y), lambda);
    case problem_kind::logistic_regression:
      return logistic_regression(std::move(X), std::move(y), lambda);
    case problem_kind::softmax_regression:
      return softmax_regression(std::move(X), std::move(y), classes, lambda);
    case problem_kind::linear_svm:
      return linear_svm(std::move(X), std::move(y), lambda);
    case problem_kind::l1_linear_regression:
      return l1_linear_regression(std::move(X), std::move(y), lambda);
    case problem_kind::l1_logistic_regression:
      return l1_logistic_regression(std::move(X), std::move(y), lambda);
  }
  throw config_error("make_problem: unhandled problem kind");
}

} // namespace stochkit
