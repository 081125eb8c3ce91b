// Whole-epoch solver throughput on a fixed logistic task. Times one full
// training budget per iteration so per-epoch overhead (tables, snapshots,
// curvature pairs) shows up alongside raw gradient arithmetic.

#include "stochkit/problems/datagen.hpp"
#include "stochkit/problems/logistic_regression.hpp"
#include "stochkit/solvers.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace stochkit;

namespace {

const problem& bench_task() {
  static const problem_ptr p = [] {
    const dataset d = generate_logistic_data(2048, 32, 42);
    return logistic_regression(d.X_train, d.y_train, 0.01);
  }();
  return *p;
}

void solver_epochs(benchmark::State& state, const std::string& name, double step) {
  const problem& p = bench_task();
  options_patch u;
  u.batch_size = 16;
  u.step_init = step;
  u.max_epoch = 5;
  u.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(name, p, u));
  }
  state.SetItemsProcessed(state.iterations() * u.max_epoch.value() * p.n());
}

} // namespace

BENCHMARK_CAPTURE(solver_epochs, sgd, "SGD", 0.05);
BENCHMARK_CAPTURE(solver_epochs, adam, "Adam", 0.01);
BENCHMARK_CAPTURE(solver_epochs, svrg, "SVRG", 0.05);
BENCHMARK_CAPTURE(solver_epochs, saga, "SAGA", 0.05);
BENCHMARK_CAPTURE(solver_epochs, sarah, "SARAH", 0.05);
BENCHMARK_CAPTURE(solver_epochs, obfgs, "oBFGS-Inf", 0.05);
BENCHMARK_CAPTURE(solver_epochs, svrg_lbfgs, "SVRG-LBFGS", 0.05);

BENCHMARK_MAIN();
