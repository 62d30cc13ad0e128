#pragma once

#include <stdexcept>
#include <string>

namespace gcdtn {

enum class Errc {
  ZeroInput,
  NegativeValue,
  ParseError,
  InvalidSet,
  NotAMember,
  DuplicateRows,
  NotPrime,
  PrimesNotIncreasing,
  NotSquare,
  DimensionMismatch,
  Singular,
  NotSymmetric,
  TooLargeForExhaustiveMinors,
  NotTn,
  IndexOrder,
  SingularDenominator,
  SizeTooSmall,
  InvalidArgument,
  InternalConsistency,
};

auto errc_name(Errc code) -> const char *;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the Python module) can map it without string matching.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
    : std::runtime_error(what), code_(code) {}

  [[nodiscard]] auto code() const noexcept -> Errc { return code_; }

private:
  Errc code_;
};

} // namespace gcdtn
