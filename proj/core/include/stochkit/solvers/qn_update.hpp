#pragma once

#include "stochkit/types.hpp"

#include <cstdint>
#include <deque>

namespace stochkit {

// One curvature pair s = w_new - w_old, y = g_new - g_old, rho = 1 / s'y.
struct curvature_pair {
  vec s;
  vec y;
  double rho;
};

// Bounded FIFO of accepted curvature pairs. Pairs with s'y <= 0 are skipped
// and counted rather than stored; convexity makes them rare but mini-batch
// noise can produce them.
class pair_memory {
 public:
  explicit pair_memory(std::int64_t capacity);

  // Returns false (and bumps the skip counter) when s'y <= 0 or non-finite.
  bool push(vec s, vec y);

  const std::deque<curvature_pair>& pairs() const { return pairs_; }
  std::int64_t skipped() const { return skipped_; }
  bool empty() const { return pairs_.empty(); }

  // Newest-pair scaling s'y / y'y for the implicit H0; 1 before any pair.
  double gamma() const;

 private:
  std::int64_t capacity_;
  std::int64_t skipped_ = 0;
  std::deque<curvature_pair> pairs_;
};

// Dense inverse-Hessian update H <- (I - rho s y') H (I - rho y s') + rho s s'.
// Requires s'y > 0; the result keeps the secant property H y = s exactly.
void bfgs_update_inverse(mat& H, const vec& s, const vec& y);

// Dense direct-Hessian update B <- B - (B s s' B) / (s'B s) + (y y') / (s'y).
// Returns false and leaves B untouched when s'y <= 0 or s'Bs <= 0.
bool bfgs_update_direct(mat& B, const vec& s, const vec& y);

// Two-loop recursion with H0 = gamma I; returns the direction -H g.
vec two_loop_direction(const std::deque<curvature_pair>& pairs, const vec& g, double gamma);

// Powell damping: y_damped = theta y + (1 - theta) Bs with theta picked so
// s'y_damped >= 0.2 s'Bs (exactly at the bound when damping engages).
vec powell_damp(const vec& s, const vec& y, const vec& Bs);

} // namespace stochkit
