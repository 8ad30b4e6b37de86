#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lensfill {

enum class Errc {
  InvalidPair,
  NotInvertible,
  InvalidInput,
  NotBlowdownable,
  NotAFilling,
  HypothesisViolated,
  PreconditionViolated,
  InvalidSpin,
  // The following signal that a computed consequence of the classification
  // did not hold. They are never expected.
  TheoremViolation,
  ClosureViolated,
  TerminalRelationViolated,
  ConsistencyViolated,
  EnumerationBoundViolated,
};

std::string_view to_string(Errc code) noexcept;

/// Bad arguments: a violated precondition on caller-supplied data.
class InputError : public std::invalid_argument {
public:
  InputError(Errc code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// A check derived from the classification failed. The CLI maps this to
/// exit status 2.
class AssertionFailure : public std::logic_error {
public:
  AssertionFailure(Errc code, const std::string& what)
      : std::logic_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace lensfill
