#include "k3lat/errors.hpp"

namespace k3lat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::OddLattice: return "OddLattice";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::SignatureError: return "SignatureError";
    case ErrorKind::NotPositiveClass: return "NotPositiveClass";
    case ErrorKind::NeedsAmpleContext: return "NeedsAmpleContext";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::InvalidContext: return "InvalidContext";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace k3lat
