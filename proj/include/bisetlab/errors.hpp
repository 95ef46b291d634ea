#pragma once

#include <stdexcept>
#include <string>

namespace bisetlab {

/// Base of every error raised by the library. The CLI maps these to exit 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define BISETLAB_ERROR(Name)                                       \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

BISETLAB_ERROR(NotAGroup);
BISETLAB_ERROR(OrderCapExceeded);
BISETLAB_ERROR(FactorMismatch);
BISETLAB_ERROR(BadAxis);
BISETLAB_ERROR(NotAUnit);
BISETLAB_ERROR(NotCyclic);
BISETLAB_ERROR(NotRational);
BISETLAB_ERROR(NotIntegral);
BISETLAB_ERROR(ShiftMismatch);
BISETLAB_ERROR(FieldMismatch);
BISETLAB_ERROR(TableComputationFailure);
BISETLAB_ERROR(IncompleteCatalog);
BISETLAB_ERROR(NotAModule);
BISETLAB_ERROR(CoprimalityViolated);
BISETLAB_ERROR(InvalidInput);

#undef BISETLAB_ERROR

}  // namespace bisetlab
