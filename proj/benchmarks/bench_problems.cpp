// Problem-evaluation throughput: per-batch gradient cost is the unit every
// solver budget is measured in, so regressions here skew every comparison.

#include "stochkit/harness/config.hpp"
#include "stochkit/problems/datagen.hpp"
#include "stochkit/rng.hpp"

#include <benchmark/benchmark.h>

using namespace stochkit;

namespace {

struct bench_problem {
  problem_ptr p;
  vec w;
};

bench_problem make(problem_kind kind, index_t n, index_t d, index_t classes) {
  dataset data;
  switch (kind) {
  case problem_kind::softmax_regression:
    data = generate_multiclass_data(n, d, classes, 42);
    break;
  case problem_kind::linear_regression:
    data = generate_linear_data(n, d, 0.1, 42);
    break;
  default:
    data = generate_logistic_data(n, d, 42);
    break;
  }
  bench_problem out;
  out.p = make_problem(kind, data.X_train, data.y_train, 0.01, classes);
  rng_engine rng(7);
  out.w = rng.normal_vec(out.p->dim());
  return out;
}

void grad_batch(benchmark::State& state, problem_kind kind, index_t classes = 0) {
  const auto fx = make(kind, 4096, 64, classes);
  const index_t b = state.range(0);
  rng_engine rng(11);
  const index_list batch = rng.sample_iid(fx.p->n(), b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fx.p->grad(fx.w, batch));
  }
  state.SetItemsProcessed(state.iterations() * b);
}

void full_grad(benchmark::State& state, problem_kind kind, index_t classes = 0) {
  const auto fx = make(kind, 4096, 64, classes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fx.p->full_grad(fx.w));
  }
  state.SetItemsProcessed(state.iterations() * fx.p->n());
}

void cost(benchmark::State& state, problem_kind kind, index_t classes = 0) {
  const auto fx = make(kind, 4096, 64, classes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fx.p->cost(fx.w));
  }
}

void hess_vec(benchmark::State& state, problem_kind kind, index_t classes = 0) {
  const auto fx = make(kind, 4096, 64, classes);
  rng_engine rng(13);
  const index_list batch = rng.sample_iid(fx.p->n(), 128);
  const vec v = rng.normal_vec(fx.p->dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(fx.p->hess_vec(fx.w, v, batch));
  }
}

} // namespace

BENCHMARK_CAPTURE(grad_batch, logistic, problem_kind::logistic_regression)
    ->Arg(1)->Arg(16)->Arg(256);
BENCHMARK_CAPTURE(grad_batch, linear, problem_kind::linear_regression)
    ->Arg(1)->Arg(16)->Arg(256);
BENCHMARK_CAPTURE(grad_batch, softmax, problem_kind::softmax_regression, 10)
    ->Arg(1)->Arg(16)->Arg(256);
BENCHMARK_CAPTURE(full_grad, logistic, problem_kind::logistic_regression);
BENCHMARK_CAPTURE(full_grad, softmax, problem_kind::softmax_regression, 10);
BENCHMARK_CAPTURE(cost, logistic, problem_kind::logistic_regression);
BENCHMARK_CAPTURE(hess_vec, logistic, problem_kind::logistic_regression);
BENCHMARK_CAPTURE(hess_vec, softmax, problem_kind::softmax_regression, 10);

BENCHMARK_MAIN();
