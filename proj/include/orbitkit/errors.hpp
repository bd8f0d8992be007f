#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

enum class ErrorKind {
  InvalidInput,     // malformed input, parse failures, unknown names
  Mismatch,         // operands from different algebras/charts
  Precondition,     // a documented precondition does not hold
  NonTerminating,   // a star product whose series does not terminate
  CapExceeded,      // a form degree beyond the configured cap
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace orbitkit
