#include "resonance/error.hpp"

namespace resonance {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parameter: return "parameter error";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Resource: return "resource error";
    case ErrorKind::InsufficientTable: return "insufficient prime table";
    case ErrorKind::SizeOverflow: return "size overflow";
    case ErrorKind::DivisorExplosion: return "divisor explosion";
    case ErrorKind::NearPole: return "near pole";
    case ErrorKind::RemovableSingularity: return "removable singularity";
    case ErrorKind::Convergence: return "convergence error";
    case ErrorKind::ImplementationFault: return "implementation fault";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Convergence: return 3;
    case ErrorKind::ImplementationFault: return 4;
    default: return 2;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace resonance
