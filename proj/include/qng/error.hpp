#pragma once

#include <stdexcept>
#include <string>

namespace qng {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QNG_DECLARE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

QNG_DECLARE_ERROR(ShapeError);
QNG_DECLARE_ERROR(DegenerateInput);
QNG_DECLARE_ERROR(NumericsError);
QNG_DECLARE_ERROR(NotAnalytic);
QNG_DECLARE_ERROR(GridError);
QNG_DECLARE_ERROR(NormalizationError);
QNG_DECLARE_ERROR(SupportError);
QNG_DECLARE_ERROR(SampleSizeError);
QNG_DECLARE_ERROR(DomainError);
QNG_DECLARE_ERROR(NotAState);
QNG_DECLARE_ERROR(NotDistribution);
QNG_DECLARE_ERROR(ParseError);

#undef QNG_DECLARE_ERROR

/// Raised when a state does not fit in the requested Fock cutoff.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, int required_cutoff)
      : Error(what), required_cutoff_(required_cutoff) {}
  /// Smallest cutoff that would have satisfied the tail tolerance (0 if unknown).
  int required_cutoff() const noexcept { return required_cutoff_; }

 private:
  int required_cutoff_;
};

/// A sweep produced no sign change; `detects()` tells which side it stayed on.
class NoThreshold : public Error {
 public:
  NoThreshold(const std::string& what, bool detects) : Error(what), detects_(detects) {}
  bool detects() const noexcept { return detects_; }

 private:
  bool detects_;
};

}  // namespace qng
