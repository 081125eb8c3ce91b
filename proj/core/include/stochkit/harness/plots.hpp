#pragma once

#include "stochkit/problem.hpp"
#include "stochkit/record.hpp"
#include "stochkit/types.hpp"

#include <string>
#include <vector>

namespace stochkit {

struct plot_series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

// Line chart, one polyline per series, legend from series names. log_y drops
// non-positive and non-finite points before the transform.
std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<plot_series>& series,
                          bool log_y);

// One panel per solver: test points placed by their first two features and
// colored by the predicted class; misclassified points get a dark ring.
// Requires 2 or 3 feature columns.
std::string classification_svg(const problem& prob, const std::vector<std::string>& names,
                               const std::vector<vec>& finals, const mat& X_test,
                               const vec& y_test);

// Iterate paths (w_hist) over cost contours. Parameter dimension must be 2.
std::string trajectory_svg(const problem& prob, const std::vector<std::string>& names,
                           const std::vector<std::vector<vec>>& paths);

} // namespace stochkit
