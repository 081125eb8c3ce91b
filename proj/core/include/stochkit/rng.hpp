#pragma once

#include "stochkit/types.hpp"

#include <cstdint>
#include <random>

namespace stochkit {

// Seedable PRNG used everywhere randomness appears. The core generator is
// std::mt19937_64; the transforms below (bounded uniform by rejection,
// Box-Muller normals) are implemented here so the stream does not depend on
// standard-library distribution internals. Same seed, same sequence of calls,
// same values, on any platform.
class rng_engine {
 public:
  explicit rng_engine(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Uniform double in (0, 1], 53-bit resolution.
  double uniform01();

  // Standard normal via Box-Muller; generates values in pairs.
  double normal();

  vec normal_vec(index_t d);

  // Fisher-Yates shuffle of 0..n-1.
  index_list permutation(index_t n);

  // count iid draws from 0..n-1 (with replacement).
  index_list sample_iid(index_t n, index_t count);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

} // namespace stochkit
