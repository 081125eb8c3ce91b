#include "stochkit/solvers/subsamp_svrg.hpp"

#include "stochkit/errors.hpp"
#include "stochkit/session.hpp"
#include "stochkit/solvers/svrg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

namespace stochkit {

namespace {

// Inverse of the eigenvalue-floored Hessian. Exact scalar form when the floor
// binds everywhere, so that case introduces no eigensolver round-off.
mat floored_inverse(const mat& H, double sigma_rel, std::optional<double> sigma_abs) {
  Eigen::SelfAdjointEigenSolver<mat> eig(H);
  if (eig.info() != Eigen::Success)
    throw error("subsamp_svrg: eigendecomposition failed");
  const vec& lam = eig.eigenvalues();
  const double lam_max = lam(lam.size() - 1);
  double sigma = sigma_abs.value_or(sigma_rel * lam_max);
  if (!(sigma > 0.0) || !std::isfinite(sigma)) sigma = 1.0;

  if (lam.maxCoeff() <= sigma)
    return (1.0 / sigma) * mat::Identity(H.rows(), H.cols());

  vec inv_lam(lam.size());
  for (index_t i = 0; i < lam.size(); ++i) inv_lam(i) = 1.0 / std::max(lam(i), sigma);
  return eig.eigenvectors() * inv_lam.asDiagonal() * eig.eigenvectors().transpose();
}

} // namespace

solver_result subsamp_svrg(const problem& prob, const options_patch& user) {
  const solver_options o = merge_options(global_defaults(), {}, user);
  if (prob.has_prox())
    throw config_error("subsamp_svrg: composite objectives are not supported");
  solver_session s(prob, o, "SS-SVRG");

  const std::int64_t b_h = o.hess_batch.value_or(2 * o.batch_size);
  if (b_h < 1 || b_h > prob.n())
    throw config_error("subsamp_svrg: hess_batch must lie in [1, n]");

  vec w = s.initial_w();
  if (s.record_epoch(w)) return s.finish(std::move(w));
  const std::int64_t m = s.steps_per_epoch();
  const auto b = static_cast<std::int64_t>(o.batch_size);

  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    const vec snap_w = w;
    const vec snap_mu = prob.full_grad(snap_w);
    s.add_grad_evals(prob.n());

    const index_list hbatch = s.draw_hess_batch(static_cast<index_t>(b_h));
    const mat P = floored_inverse(prob.hess(snap_w, hbatch), o.ss_sigma_rel, o.ss_sigma_abs);
    s.add_grad_evals(b_h);

    for (std::int64_t t = 0; t < m; ++t) {
      const index_list batch = s.draw_iid_batch(o.batch_size);
      const double eta = s.step_now();
      const vec v = svrg_gradient(prob, w, snap_w, snap_mu, batch);
      s.add_grad_evals(2 * b);
      w -= eta * (P * v);
      s.tick();
    }
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
