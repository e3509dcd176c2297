#pragma once

#include <stdexcept>
#include <string>

namespace fdalg {

enum class ErrorKind {
  Validation,
  UnsupportedCharacteristic,
  InternalCheckFailed,
  NotSplit,
  IdempotentsRequired,
  NotIdempotent,
  FieldMismatch,
  NotAutomorphism,
  AlgebraMismatch,
  EmptySpan,
  DualNotInvertible,
  NotQuasiFrobenius,
  Degenerate,
  NotBimoduleMorphism,
  NotAssociativeMorphism,
  InvalidC,
  BadParams,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// Throws InternalCheckFailed when cond is false.
inline void check_internal(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InternalCheckFailed, what);
}

}  // namespace fdalg
