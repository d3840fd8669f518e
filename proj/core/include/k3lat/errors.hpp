#pragma once

#include <stdexcept>
#include <string>

namespace k3lat {

enum class ErrorKind {
  LatticeMismatch,
  DegenerateLattice,
  OddLattice,
  ShapeError,
  NotARoot,
  SignatureError,
  NotPositiveClass,
  NeedsAmpleContext,
  NotEffective,
  NotPrimitive,
  ParityError,
  Disconnected,
  ClassMismatch,
  TooLarge,
  RangeError,
  DegreeCapExceeded,
  InvalidContext,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace k3lat
