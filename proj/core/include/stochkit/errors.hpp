#pragma once

#include <stdexcept>
#include <string>

namespace stochkit {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid option value or solver/problem configuration; the message names the field.
class config_error : public error {
 public:
  using error::error;
};

// Malformed input data; carries the 1-based line number when one applies.
class data_error : public error {
 public:
  explicit data_error(const std::string& msg, long line = 0)
      : error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg), line_(line) {}
  long line() const { return line_; }

 private:
  long line_ = 0;
};

class argument_error : public error {
 public:
  using error::error;
};

} // namespace stochkit
