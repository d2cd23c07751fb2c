#pragma once

#include <stdexcept>
#include <string>

namespace holo {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorKind {
  parse = 2,       // malformed input document
  validation = 3,  // well-formed but mathematically invalid input
  cap = 4,         // an order / size cap was exceeded
  internal = 5,    // a checked invariant failed; signals a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

private:
  ErrorKind kind_;
};

inline void check(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) throw Error(kind, msg);
}

// For conditions the mathematics guarantees; failure means a bug here.
inline void check_internal(bool cond, const std::string& msg) {
  check(cond, ErrorKind::internal, msg);
}

}  // namespace holo
