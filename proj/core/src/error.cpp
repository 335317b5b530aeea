#include "bivalence/error.hpp"

namespace bivalence {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
  case Errc::NotAPartialOrder: return "NotAPartialOrder";
  case Errc::NoUniqueBound: return "NoUniqueBound";
  case Errc::NoBoundedExtremes: return "NoBoundedExtremes";
  case Errc::BadInvolution: return "BadInvolution";
  case Errc::UnknownElement: return "UnknownElement";
  case Errc::UnsupportedFamily: return "UnsupportedFamily";
  case Errc::SyntaxError: return "SyntaxError";
  case Errc::UnboundAtom: return "UnboundAtom";
  case Errc::InfeasibleFrozen: return "InfeasibleFrozen";
  case Errc::BoundaryCondition: return "BoundaryCondition";
  case Errc::MissingEntry: return "MissingEntry";
  case Errc::OutOfRange: return "OutOfRange";
  case Errc::InadmissibleValue: return "InadmissibleValue";
  case Errc::BindingAtExtreme: return "BindingAtExtreme";
  case Errc::DegenerateScenario: return "DegenerateScenario";
  case Errc::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(Errc::SyntaxError, message + " at position " + std::to_string(position)),
      position_(position) {}

} // namespace bivalence
