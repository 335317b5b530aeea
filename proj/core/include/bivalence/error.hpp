#ifndef BIVALENCE_ERROR_HPP
#define BIVALENCE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bivalence {

/// Failure categories raised by the library. Every thrown `Error` carries one.
enum class Errc {
  // lattice
  NotAPartialOrder,
  NoUniqueBound,
  NoBoundedExtremes,
  BadInvolution,
  UnknownElement,
  UnsupportedFamily,
  // formula
  SyntaxError,
  // valuation
  UnboundAtom,
  InfeasibleFrozen,
  BoundaryCondition,
  // probability
  MissingEntry,
  OutOfRange,
  // nogo
  InadmissibleValue,
  BindingAtExtreme,
  DegenerateScenario,
  // input decoding
  MalformedInput,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Thrown by the DSL parser; `position()` is the 0-based byte offset of the
/// offending token.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace bivalence

#endif // BIVALENCE_ERROR_HPP
