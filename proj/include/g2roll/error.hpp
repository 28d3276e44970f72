#pragma once

#include <stdexcept>
#include <string>

namespace g2roll {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define G2ROLL_DEFINE_ERROR(Name)                  \
  class Name : public Error {                      \
   public:                                         \
    explicit Name(const std::string& what)         \
        : Error(std::string(#Name ": ") + what) {} \
  }

G2ROLL_DEFINE_ERROR(DimensionMismatch);
G2ROLL_DEFINE_ERROR(SingularMatrix);
G2ROLL_DEFINE_ERROR(NonTraceless);
G2ROLL_DEFINE_ERROR(ClosureViolation);
G2ROLL_DEFINE_ERROR(NotNilpotent);
G2ROLL_DEFINE_ERROR(TableMismatch);
G2ROLL_DEFINE_ERROR(DecompositionFailure);
G2ROLL_DEFINE_ERROR(NotClosed);
G2ROLL_DEFINE_ERROR(NoSolution);
G2ROLL_DEFINE_ERROR(SpectrumMismatch);
G2ROLL_DEFINE_ERROR(RelationFailure);
G2ROLL_DEFINE_ERROR(PlaneMismatch);
G2ROLL_DEFINE_ERROR(NotUnit);
G2ROLL_DEFINE_ERROR(DegeneratePoint);
G2ROLL_DEFINE_ERROR(NotNull);
G2ROLL_DEFINE_ERROR(NotNormalized);
G2ROLL_DEFINE_ERROR(IdentityFailure);
G2ROLL_DEFINE_ERROR(BadParameters);
G2ROLL_DEFINE_ERROR(ParseError);

#undef G2ROLL_DEFINE_ERROR

}  // namespace g2roll
