#include "stochkit/rng.hpp"

#include "stochkit/errors.hpp"

#include <cmath>
#include <numbers>

namespace stochkit {

std::uint64_t rng_engine::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw argument_error("uniform_below: bound must be >= 1");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % bound;
}

double rng_engine::uniform01() {
  return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
}

double rng_engine::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

vec rng_engine::normal_vec(index_t d) {
  vec v(d);
  for (index_t i = 0; i < d; ++i) v[i] = normal();
  return v;
}

index_list rng_engine::permutation(index_t n) {
  index_list p(static_cast<std::size_t>(n));
  for (index_t i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  for (index_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<index_t>(uniform_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  }
  return p;
}

index_list rng_engine::sample_iid(index_t n, index_t count) {
  index_list s(static_cast<std::size_t>(count));
  for (index_t i = 0; i < count; ++i)
    s[static_cast<std::size_t>(i)] = static_cast<index_t>(uniform_below(static_cast<std::uint64_t>(n)));
  return s;
}

} // namespace stochkit
