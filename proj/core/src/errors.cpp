#include "lensfill/errors.hpp"

namespace lensfill {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidPair: return "InvalidPair";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotBlowdownable: return "NotBlowdownable";
    case Errc::NotAFilling: return "NotAFilling";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InvalidSpin: return "InvalidSpin";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::ClosureViolated: return "ClosureViolated";
    case Errc::TerminalRelationViolated: return "TerminalRelationViolated";
    case Errc::ConsistencyViolated: return "ConsistencyViolated";
    case Errc::EnumerationBoundViolated: return "EnumerationBoundViolated";
  }
  return "Unknown";
}

}  // namespace lensfill
