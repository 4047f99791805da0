#pragma once

#include <stdexcept>
#include <string>

namespace hullmorse {

enum class ErrorKind {
  kInvalidInput,
  kPreconditionViolation,
  kDegenerateInput,
  kInternalConsistency,
  kResourceLimit,
};

/// Single exception type for the library; the kind selects the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// 1 for bad input, 2 for internal consistency failures, 3 for resource limits.
  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::kInternalConsistency: return 2;
      case ErrorKind::kResourceLimit: return 3;
      default: return 1;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace hullmorse
