#pragma once

#include <stdexcept>
#include <string>

namespace grinv {

// Each failure mode gets its own type so callers (and the CLI exit-code
// mapping) can dispatch on it.
#define GRINV_DEFINE_ERROR(Name, Base)                                         \
  class Name : public Base {                                                   \
  public:                                                                      \
    explicit Name(const std::string &what) : Base(what) {}                     \
  }

GRINV_DEFINE_ERROR(NotAPrimePower, std::invalid_argument);
GRINV_DEFINE_ERROR(DivisionByZero, std::domain_error);
GRINV_DEFINE_ERROR(DomainError, std::domain_error);
GRINV_DEFINE_ERROR(DimensionError, std::invalid_argument);
GRINV_DEFINE_ERROR(MismatchedAmbient, std::invalid_argument);
GRINV_DEFINE_ERROR(DimensionCap, std::length_error);
GRINV_DEFINE_ERROR(PrecisionExceeded, std::runtime_error);
GRINV_DEFINE_ERROR(CorankMismatch, std::runtime_error);
GRINV_DEFINE_ERROR(InconsistentBudget, std::logic_error);
GRINV_DEFINE_ERROR(MonotonicityError, std::logic_error);
GRINV_DEFINE_ERROR(CharacteristicClash, std::invalid_argument);
GRINV_DEFINE_ERROR(UnclassifiedCase, std::logic_error);
GRINV_DEFINE_ERROR(ConfigError, std::invalid_argument);

#undef GRINV_DEFINE_ERROR

} // namespace grinv
