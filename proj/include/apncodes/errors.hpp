#pragma once

#include <stdexcept>
#include <string>

namespace apncodes {

/// Base of every error raised by the library. Catch this to handle all of them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define APNCODES_DEFINE_ERROR(Name)              \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  }

APNCODES_DEFINE_ERROR(UnsupportedBase);
APNCODES_DEFINE_ERROR(NotIrreducible);
APNCODES_DEFINE_ERROR(NotPrimitive);
APNCODES_DEFINE_ERROR(FieldTooLarge);
APNCODES_DEFINE_ERROR(DivisionByZero);
APNCODES_DEFINE_ERROR(ZeroConstantTerm);
APNCODES_DEFINE_ERROR(NotCoprime);
APNCODES_DEFINE_ERROR(InvalidArgs);
APNCODES_DEFINE_ERROR(NotMonomial);
APNCODES_DEFINE_ERROR(InvalidParams);
APNCODES_DEFINE_ERROR(PeriodMismatch);
APNCODES_DEFINE_ERROR(TheoremPreconditionUnmet);
APNCODES_DEFINE_ERROR(CapExceeded);
APNCODES_DEFINE_ERROR(ParseError);
APNCODES_DEFINE_ERROR(NonExactDivision);

#undef APNCODES_DEFINE_ERROR

}  // namespace apncodes
