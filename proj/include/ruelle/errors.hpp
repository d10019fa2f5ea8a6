#pragma once

#include <stdexcept>
#include <string>

namespace ruelle {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Errors the CLI maps to exit code 3: the request is well-formed but
/// mathematically inadmissible.
class DomainError : public Error {
 public:
  using Error::Error;
};

#define RUELLE_DEFINE_ERROR(Name, Base)            \
  class Name : public Base {                       \
   public:                                         \
    explicit Name(const std::string& what)         \
        : Base(std::string(#Name ": ") + what) {}  \
  };

RUELLE_DEFINE_ERROR(OverflowError, Error)
RUELLE_DEFINE_ERROR(DivisionByZero, DomainError)
RUELLE_DEFINE_ERROR(IncompatibleRadicand, DomainError)
RUELLE_DEFINE_ERROR(NegativeInput, DomainError)
RUELLE_DEFINE_ERROR(UnsupportedFamily, DomainError)
RUELLE_DEFINE_ERROR(UnsupportedGroup, DomainError)
RUELLE_DEFINE_ERROR(UnsupportedWeight, DomainError)
RUELLE_DEFINE_ERROR(IncompatiblePair, DomainError)
RUELLE_DEFINE_ERROR(SizeLimit, DomainError)
RUELLE_DEFINE_ERROR(GradingFailure, Error)
RUELLE_DEFINE_ERROR(NotScalar, Error)
RUELLE_DEFINE_ERROR(RadicandOverflow, Error)
RUELLE_DEFINE_ERROR(FactorizationDiverged, Error)
RUELLE_DEFINE_ERROR(ParseError, Error)

#undef RUELLE_DEFINE_ERROR

}  // namespace ruelle
