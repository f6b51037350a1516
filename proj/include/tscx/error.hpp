#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tscx {

// Broad failure class; maps one-to-one onto the C API status codes and the
// CLI exit codes.
enum class ErrorKind {
  usage = 1,      // bad parameters or preconditions on arguments
  data = 2,       // input data unusable (parse failure, degenerate series, I/O)
  numerical = 3,  // a computation could not produce a finite answer
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by sample entropy when either match count is zero.
class InsufficientMatches : public Error {
 public:
  InsufficientMatches(std::size_t a, std::size_t b)
      : Error(ErrorKind::numerical, "insufficient matches (A=" + std::to_string(a) +
                                        ", B=" + std::to_string(b) + ")"),
        a_count(a),
        b_count(b) {}

  std::size_t a_count;
  std::size_t b_count;
};

}  // namespace tscx
