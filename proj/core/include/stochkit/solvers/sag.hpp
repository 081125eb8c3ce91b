#pragma once

#include "stochkit/options.hpp"
#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"
#include "stochkit/types.hpp"

namespace stochkit {

// Per-sample gradient store with a running column sum, so the table mean is
// O(dim) per query instead of O(n dim).
class gradient_table {
 public:
  gradient_table(index_t dim, index_t n);

  index_t n() const { return table_.cols(); }
  index_t dim() const { return table_.rows(); }

  vec column(index_t i) const;
  // Replaces column i and keeps the sum consistent.
  void update(index_t i, const vec& g);
  vec mean() const;
  const vec& sum() const { return sum_; }

 private:
  mat table_;
  vec sum_;
};

// SAG averages the whole table after refreshing the batch rows; SAGA uses the
// unbiased correction (new - old) + old mean. sub_mode picks the variant.
// Local default batch_size = 1.
solver_result sag(const problem& prob, const options_patch& user = {});

} // namespace stochkit
