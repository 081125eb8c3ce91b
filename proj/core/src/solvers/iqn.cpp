#include "stochkit/solvers/iqn.hpp"

#include "stochkit/errors.hpp"
#include "stochkit/session.hpp"
#include "stochkit/solvers/qn_update.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace stochkit {

solver_result iqn(const problem& prob, const options_patch& user) {
  const solver_options o = merge_options(global_defaults(), {}, user);
  if (prob.has_prox()) throw config_error("iqn: composite objectives are not supported");

  const index_t n = prob.n();
  const index_t d = prob.dim();
  // n dense d x d matrices; cap the footprint near 1.6 GB of doubles.
  if (static_cast<double>(n) * static_cast<double>(d) * static_cast<double>(d) > 2e8)
    throw config_error("iqn: n * dim^2 exceeds the per-sample matrix budget");
  solver_session s(prob, o, "IQN");

  vec w = s.initial_w();
  if (s.record_epoch(w)) return s.finish(std::move(w));

  // Per-sample state and the running aggregates of the closed-form solve.
  std::vector<mat> B(static_cast<std::size_t>(n), mat::Identity(d, d));
  mat z(d, n);
  mat g(d, n);
  for (index_t i = 0; i < n; ++i) {
    z.col(i) = w;
    g.col(i) = prob.grad(w, index_span(&i, 1));
  }
  s.add_grad_evals(n);
  mat B_sum = static_cast<double>(n) * mat::Identity(d, d);
  vec Bz_sum = static_cast<double>(n) * w;
  vec g_sum = g.rowwise().sum();

  index_t cursor = 0;
  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    for (index_t t = 0; t < n; ++t) {
      const index_t i = cursor;
      cursor = (cursor + 1) % n;
      auto& Bi = B[static_cast<std::size_t>(i)];

      const Eigen::LLT<mat> llt(B_sum);
      if (llt.info() != Eigen::Success)
        throw error("iqn: aggregated matrix is numerically singular");
      const vec w_new = llt.solve(Bz_sum - g_sum);
      const vec g_new = prob.grad(w_new, index_span(&i, 1));
      s.add_grad_evals(1);

      const vec sv = w_new - z.col(i);
      const vec yv = g_new - g.col(i);

      // Remove sample i's old contribution, refresh its state, re-add.
      B_sum -= Bi;
      Bz_sum -= Bi * z.col(i);
      g_sum -= g.col(i);
      bfgs_update_direct(Bi, sv, yv); // leaves Bi untouched on bad curvature
      B_sum += Bi;
      Bz_sum += Bi * w_new;
      g_sum += g_new;
      z.col(i) = w_new;
      g.col(i) = g_new;

      w = w_new;
      s.tick();
    }

    // The incremental aggregates drift only through round-off; verify them
    // against a full rebuild once per cycle.
    mat B_chk = mat::Zero(d, d);
    vec Bz_chk = vec::Zero(d);
    for (index_t i = 0; i < n; ++i) {
      B_chk += B[static_cast<std::size_t>(i)];
      Bz_chk += B[static_cast<std::size_t>(i)] * z.col(i);
    }
    const double scale = std::max(1.0, B_chk.norm());
    if ((B_chk - B_sum).norm() > 1e-10 * scale ||
        (Bz_chk - Bz_sum).norm() > 1e-10 * std::max(1.0, Bz_chk.norm()) ||
        (g.rowwise().sum() - g_sum).norm() > 1e-10 * std::max(1.0, g_sum.norm()))
      throw error("iqn: incremental aggregates drifted from their definitions");
    B_sum = B_chk;
    Bz_sum = Bz_chk;

    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
