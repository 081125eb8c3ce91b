#include "stochkit/solvers.hpp"

#include "stochkit/solvers/adaptive.hpp"
#include "stochkit/solvers/bb_sgd.hpp"
#include "stochkit/solvers/iqn.hpp"
#include "stochkit/solvers/obfgs.hpp"
#include "stochkit/solvers/sag.hpp"
#include "stochkit/solvers/sarah.hpp"
#include "stochkit/solvers/sgd.hpp"
#include "stochkit/solvers/slbfgs.hpp"
#include "stochkit/solvers/subsamp_svrg.hpp"
#include "stochkit/solvers/svrg.hpp"
#include "stochkit/solvers/svrg_bb.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

namespace stochkit {

namespace {

using solver_fn = std::function<solver_result(const problem&, const options_patch&)>;

struct registry_entry {
  std::string name;
  solver_fn run;
};

options_patch with_sub(options_patch p, std::string sub) {
  p.sub_mode = std::move(sub);
  return p;
}

// Regularized and damped oBFGS default the shift to 0.1 unless the caller
// picked one; damping is forced on for the damped entry.
options_patch reg_obfgs_patch(options_patch p, bool damped) {
  p.sub_mode = "Inf-mem";
  if (!p.delta) p.delta = 0.1;
  if (damped) p.damped = true;
  return p;
}

const std::vector<registry_entry>& registry() {
  static const std::vector<registry_entry> table = {
      {"SGD", [](const problem& pr, const options_patch& u) { return sgd(pr, u); }},
      {"SGD-CM",
       [](const problem& pr, const options_patch& u) {
         return sgd_momentum(pr, with_sub(u, "CM"));
       }},
      {"SGD-CM-NAG",
       [](const problem& pr, const options_patch& u) {
         return sgd_momentum(pr, with_sub(u, "CM-NAG"));
       }},
      {"AdaGrad",
       [](const problem& pr, const options_patch& u) {
         return adagrad_family(pr, with_sub(u, "AdaGrad"));
       }},
      {"RMSProp",
       [](const problem& pr, const options_patch& u) {
         return adagrad_family(pr, with_sub(u, "RMSProp"));
       }},
      {"AdaDelta",
       [](const problem& pr, const options_patch& u) {
         return adagrad_family(pr, with_sub(u, "AdaDelta"));
       }},
      {"Adam",
       [](const problem& pr, const options_patch& u) {
         return adam_family(pr, with_sub(u, "Adam"));
       }},
      {"AdaMax",
       [](const problem& pr, const options_patch& u) {
         return adam_family(pr, with_sub(u, "AdaMax"));
       }},
      {"SVRG", [](const problem& pr, const options_patch& u) { return svrg(pr, u); }},
      {"SAG",
       [](const problem& pr, const options_patch& u) { return sag(pr, with_sub(u, "SAG")); }},
      {"SAGA",
       [](const problem& pr, const options_patch& u) { return sag(pr, with_sub(u, "SAGA")); }},
      {"SARAH",
       [](const problem& pr, const options_patch& u) {
         return sarah(pr, with_sub(u, "SARAH"));
       }},
      {"SARAH-Plus",
       [](const problem& pr, const options_patch& u) {
         return sarah(pr, with_sub(u, "SARAH-Plus"));
       }},
      {"SVRG-BB", [](const problem& pr, const options_patch& u) { return svrg_bb(pr, u); }},
      {"BB-SGD", [](const problem& pr, const options_patch& u) { return bb_sgd(pr, u); }},
      {"oBFGS-Inf",
       [](const problem& pr, const options_patch& u) {
         return obfgs(pr, with_sub(u, "Inf-mem"));
       }},
      {"oLBFGS-Lim",
       [](const problem& pr, const options_patch& u) {
         return obfgs(pr, with_sub(u, "Lim-mem"));
       }},
      {"Reg-oBFGS-Inf",
       [](const problem& pr, const options_patch& u) {
         return obfgs(pr, reg_obfgs_patch(u, false));
       }},
      {"Damp-oBFGS-Inf",
       [](const problem& pr, const options_patch& u) {
         return obfgs(pr, reg_obfgs_patch(u, true));
       }},
      {"SQN",
       [](const problem& pr, const options_patch& u) {
         return slbfgs(pr, with_sub(u, "SQN"));
       }},
      {"SVRG-SQN",
       [](const problem& pr, const options_patch& u) {
         return slbfgs(pr, with_sub(u, "SVRG-SQN"));
       }},
      {"SVRG-LBFGS",
       [](const problem& pr, const options_patch& u) {
         return slbfgs(pr, with_sub(u, "SVRG-LBFGS"));
       }},
      {"SS-SVRG",
       [](const problem& pr, const options_patch& u) { return subsamp_svrg(pr, u); }},
      {"IQN", [](const problem& pr, const options_patch& u) { return iqn(pr, u); }},
  };
  return table;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

} // namespace

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    out.reserve(registry().size());
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

solver_result solve(const std::string& name, const problem& prob, const options_patch& user) {
  const std::string key = lower(name);
  for (const auto& e : registry())
    if (lower(e.name) == key) return e.run(prob, user);

  std::string msg = "unknown solver '" + name + "'; valid names:";
  for (const auto& e : registry()) msg += " " + e.name;
  throw config_error(msg);
}

} // namespace stochkit
