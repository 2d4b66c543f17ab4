#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resonance {

enum class ErrorKind {
  Parameter,
  Domain,
  Resource,
  InsufficientTable,
  SizeOverflow,
  DivisorExplosion,
  NearPole,
  RemovableSingularity,
  Convergence,
  ImplementationFault,
  Io,
};

std::string_view to_string(ErrorKind kind);

// CLI exit code for an error kind: 2 parameter-like, 3 convergence, 4 fault.
int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace resonance
