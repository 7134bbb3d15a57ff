#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qm {

enum class ErrorCode {
  Syntax,
  Parity,
  NotDivisible,
  Degenerate,
  SolveFailure,
  ZeroForm,
  NoConvergence,
  CoincidentPoints,
  Overflow,
  ExplosionGuard,
  NotConjugateClosed,
  DivisibleInput,
  ProbeDegenerate,
  OffSurface,
  NotHarmonic,
  Mismatch,
  RankIndeterminate,
  RankDeficiency,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Base of every domain error raised by the library.
///
/// `value()` carries the numeric witness of the failure when there is one
/// (residual norm, condition estimate, byte offset, achieved distance).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, double value = 0.0);

  ErrorCode code() const noexcept { return code_; }
  double value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  double value_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

#define QM_DECLARE_ERROR(Name, Code)                                \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& message, double value = 0.0)   \
        : Error(ErrorCode::Code, message, value) {}                 \
  };

QM_DECLARE_ERROR(ParityError, Parity)
QM_DECLARE_ERROR(NotDivisible, NotDivisible)
QM_DECLARE_ERROR(Degenerate, Degenerate)
QM_DECLARE_ERROR(SolveFailure, SolveFailure)
QM_DECLARE_ERROR(ZeroForm, ZeroForm)
QM_DECLARE_ERROR(NoConvergence, NoConvergence)
QM_DECLARE_ERROR(CoincidentPoints, CoincidentPoints)
QM_DECLARE_ERROR(OverflowError, Overflow)
QM_DECLARE_ERROR(ExplosionGuard, ExplosionGuard)
QM_DECLARE_ERROR(NotConjugateClosed, NotConjugateClosed)
QM_DECLARE_ERROR(DivisibleInput, DivisibleInput)
QM_DECLARE_ERROR(ProbeDegenerate, ProbeDegenerate)
QM_DECLARE_ERROR(OffSurface, OffSurface)
QM_DECLARE_ERROR(NotHarmonic, NotHarmonic)
QM_DECLARE_ERROR(Mismatch, Mismatch)
QM_DECLARE_ERROR(RankIndeterminate, RankIndeterminate)
QM_DECLARE_ERROR(RankDeficiency, RankDeficiency)
QM_DECLARE_ERROR(InvalidArgument, InvalidArgument)

#undef QM_DECLARE_ERROR

}  // namespace qm
