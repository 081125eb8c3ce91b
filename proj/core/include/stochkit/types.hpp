#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace stochkit {

using vec = Eigen::VectorXd;
using mat = Eigen::MatrixXd;
using index_t = Eigen::Index;

// View over a set of sample indices; batches are passed around without copies.
using index_span = std::span<const index_t>;
using index_list = std::vector<index_t>;

} // namespace stochkit
