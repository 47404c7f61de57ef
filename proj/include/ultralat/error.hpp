#pragma once

#include <stdexcept>
#include <string>

namespace ultralat {

enum class ErrorKind {
  InvalidArgument,  // malformed input, failed precondition
  CapExceeded,      // enumeration would exceed the configured size cap
  Internal,         // a mathematical invariant failed; indicates a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, what);
}

[[noreturn]] inline void internal_fail(const std::string& what) {
  throw Error(ErrorKind::Internal, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(what);
}

}  // namespace ultralat
