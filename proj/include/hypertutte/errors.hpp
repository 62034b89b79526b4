#pragma once

#include <stdexcept>
#include <string>

namespace hypertutte {

// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HYPERTUTTE_ERROR(Name)              \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

HYPERTUTTE_ERROR(ParseError);
HYPERTUTTE_ERROR(ValidationError);
HYPERTUTTE_ERROR(NotIncident);
HYPERTUTTE_ERROR(EqualTrees);
HYPERTUTTE_ERROR(WrongSide);
HYPERTUTTE_ERROR(NotAHypertree);
HYPERTUTTE_ERROR(NoWitness);
HYPERTUTTE_ERROR(OverflowError);
HYPERTUTTE_ERROR(BoundsTooLarge);
HYPERTUTTE_ERROR(BudgetExceeded);
HYPERTUTTE_ERROR(EmptySet);
HYPERTUTTE_ERROR(BasisOutOfRange);
HYPERTUTTE_ERROR(SearchSpaceTooLarge);
HYPERTUTTE_ERROR(GenerationFailed);
HYPERTUTTE_ERROR(NotAGraph);
HYPERTUTTE_ERROR(Disconnected);

#undef HYPERTUTTE_ERROR

}  // namespace hypertutte
