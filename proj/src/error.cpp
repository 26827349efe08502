#include "actalab/error.hpp"

namespace actalab {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::DuplicateName: return "DuplicateName";
      case ErrorKind::BadTable: return "BadTable";
      case ErrorKind::NonAssociative: return "NonAssociative";
      case ErrorKind::BadIdentity: return "BadIdentity";
      case ErrorKind::EmptyCarrier: return "EmptyCarrier";
      case ErrorKind::IdentityLawFail: return "IdentityLawFail";
      case ErrorKind::CompatibilityFail: return "CompatibilityFail";
      case ErrorKind::SideMismatch: return "SideMismatch";
      case ErrorKind::MonoidMismatch: return "MonoidMismatch";
      case ErrorKind::ElementNotFound: return "ElementNotFound";
      case ErrorKind::WitnessesInvalid: return "WitnessesInvalid";
      case ErrorKind::UnknownCondition: return "UnknownCondition";
      case ErrorKind::BadParams: return "BadParams";
      case ErrorKind::Parse: return "Parse";
      case ErrorKind::SizeCap: return "SizeCap";
    }
    return "Error";
  }

}  // namespace actalab
