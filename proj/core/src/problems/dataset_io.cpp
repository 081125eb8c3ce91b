#include "stochkit/problems/dataset_io.hpp"

#include "stochkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace stochkit {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (const char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

double parse_double(std::string_view tok, long line_no, const char* what) {
  // from_chars rejects an explicit plus, but "+1" labels are standard.
  std::string_view body = tok;
  if (body.size() > 1 && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || ptr != body.data() + body.size())
    throw data_error(std::string("expected a number for ") + what + ", got '" +
                         std::string(tok) + "'",
                     line_no);
  return value;
}

long parse_index(std::string_view tok, long line_no) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1)
    throw data_error("expected a 1-based feature index, got '" + std::string(tok) + "'",
                     line_no);
  return value;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open '" + path + "'");
  return in;
}

} // namespace

data_matrix load_csv(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  long line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto first = tok.find_first_not_of(" \t\r");
      if (first == std::string::npos)
        throw data_error("empty field", line_no);
      const auto last = tok.find_last_not_of(" \t\r");
      row.push_back(parse_double(std::string_view(tok).substr(first, last - first + 1),
                                 line_no, "a field"));
    }
    if (row.size() < 2)
      throw data_error("need at least one feature and a label", line_no);
    if (width == 0) width = row.size();
    if (row.size() != width)
      throw data_error("row has " + std::to_string(row.size()) + " fields, expected " +
                           std::to_string(width),
                       line_no);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw data_error("'" + path + "' contains no data rows");
  data_matrix out;
  const index_t n = static_cast<index_t>(rows.size());
  const index_t d = static_cast<index_t>(width) - 1;
  out.X.resize(n, d);
  out.y.resize(n);
  for (index_t i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    for (index_t j = 0; j < d; ++j) out.X(i, j) = row[static_cast<std::size_t>(j)];
    out.y[i] = row.back();
  }
  return out;
}

data_matrix load_libsvm(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<double> labels;
  std::vector<std::vector<std::pair<long, double>>> entries;
  std::string line;
  long line_no = 0;
  long max_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::stringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    labels.push_back(parse_double(tok, line_no, "the label"));
    std::vector<std::pair<long, double>> row;
    while (ss >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
        throw data_error("expected index:value, got '" + tok + "'", line_no);
      const long idx = parse_index(std::string_view(tok).substr(0, colon), line_no);
      const double val =
          parse_double(std::string_view(tok).substr(colon + 1), line_no, "a feature value");
      row.emplace_back(idx, val);
      max_index = std::max(max_index, idx);
    }
    entries.push_back(std::move(row));
  }
  if (labels.empty()) throw data_error("'" + path + "' contains no data rows");
  if (max_index == 0) throw data_error("'" + path + "' has no feature entries");
  data_matrix out;
  const index_t n = static_cast<index_t>(labels.size());
  out.X = mat::Zero(n, static_cast<index_t>(max_index));
  out.y.resize(n);
  for (index_t i = 0; i < n; ++i) {
    out.y[i] = labels[static_cast<std::size_t>(i)];
    for (const auto& [idx, val] : entries[static_cast<std::size_t>(i)])
      out.X(i, static_cast<index_t>(idx) - 1) = val;
  }
  return out;
}

data_matrix load_data_file(const std::string& path, const std::string& format) {
  if (format == "csv") return load_csv(path);
  if (format == "libsvm") return load_libsvm(path);
  throw argument_error("load_data_file: unknown format '" + format + "' (valid: csv, libsvm)");
}

} // namespace stochkit
