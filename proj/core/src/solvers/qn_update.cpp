#include "stochkit/solvers/qn_update.hpp"

#include "stochkit/errors.hpp"

#include <cmath>
#include <vector>

namespace stochkit {

pair_memory::pair_memory(std::int64_t capacity) : capacity_(capacity) {
  if (capacity < 1) throw argument_error("pair_memory: capacity must be >= 1");
}

bool pair_memory::push(vec s, vec y) {
  const double sy = s.dot(y);
  if (!std::isfinite(sy) || sy <= 0.0) {
    ++skipped_;
    return false;
  }
  pairs_.push_back({std::move(s), std::move(y), 1.0 / sy});
  if (static_cast<std::int64_t>(pairs_.size()) > capacity_) pairs_.pop_front();
  return true;
}

double pair_memory::gamma() const {
  if (pairs_.empty()) return 1.0;
  const auto& p = pairs_.back();
  return p.s.dot(p.y) / p.y.dot(p.y);
}

void bfgs_update_inverse(mat& H, const vec& s, const vec& y) {
  const double sy = s.dot(y);
  if (!(sy > 0.0)) throw argument_error("bfgs_update_inverse: needs s'y > 0");
  const double rho = 1.0 / sy;
  const vec Hy = H * y;
  // Expanded form of (I - rho s y') H (I - rho y s') + rho s s'.
  const double yHy = y.dot(Hy);
  H.noalias() -= rho * (Hy * s.transpose());
  H.noalias() -= rho * (s * Hy.transpose());
  H.noalias() += (rho * rho * yHy + rho) * (s * s.transpose());
}

bool bfgs_update_direct(mat& B, const vec& s, const vec& y) {
  const double sy = s.dot(y);
  if (!std::isfinite(sy) || sy <= 0.0) return false;
  const vec Bs = B * s;
  const double sBs = s.dot(Bs);
  if (!std::isfinite(sBs) || sBs <= 0.0) return false;
  B.noalias() -= (Bs * Bs.transpose()) / sBs;
  B.noalias() += (y * y.transpose()) / sy;
  return true;
}

vec two_loop_direction(const std::deque<curvature_pair>& pairs, const vec& g, double gamma) {
  vec q = g;
  std::vector<double> alpha(pairs.size());
  for (std::size_t k = pairs.size(); k-- > 0;) {
    const auto& p = pairs[k];
    alpha[k] = p.rho * p.s.dot(q);
    q.noalias() -= alpha[k] * p.y;
  }
  vec r = gamma * q;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& p = pairs[k];
    const double beta = p.rho * p.y.dot(r);
    r.noalias() += (alpha[k] - beta) * p.s;
  }
  return -r;
}

vec powell_damp(const vec& s, const vec& y, const vec& Bs) {
  const double sy = s.dot(y);
  const double sBs = s.dot(Bs);
  if (!(sBs > 0.0)) throw argument_error("powell_damp: needs s'Bs > 0");
  if (sy >= 0.2 * sBs) return y;
  const double theta = 0.8 * sBs / (sBs - sy);
  return theta * y + (1.0 - theta) * Bs;
}

} // namespace stochkit
