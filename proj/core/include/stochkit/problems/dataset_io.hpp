#pragma once

#include "stochkit/types.hpp"

#include <string>

namespace stochkit {

struct data_matrix {
  mat X;
  vec y;
};

// Dense CSV, one sample per row, label in the last column. Blank lines and
// lines starting with '#' are skipped. Ragged or non-numeric rows raise
// data_error with the 1-based line number.
data_matrix load_csv(const std::string& path);

// Sparse "label index:value ..." rows with 1-based indices; the feature
// dimension is the largest index seen. Malformed entries raise data_error
// with the line number.
data_matrix load_libsvm(const std::string& path);

// format is "csv" or "libsvm".
data_matrix load_data_file(const std::string& path, const std::string& format);

} // namespace stochkit
