#pragma once

#include <stdexcept>
#include <string>

namespace actalab {

  enum class ErrorKind {
    // monoid validation
    DuplicateName,
    BadTable,
    NonAssociative,
    BadIdentity,
    // act validation
    EmptyCarrier,
    IdentityLawFail,
    CompatibilityFail,
    // tensor products
    SideMismatch,
    MonoidMismatch,
    ElementNotFound,
    // morphisms and conditions
    WitnessesInvalid,
    UnknownCondition,
    BadParams,
    Parse,
    SizeCap,
  };

  char const* to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace actalab
