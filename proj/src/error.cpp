#include "gcdtn/error.hpp"

namespace gcdtn {

auto errc_name(Errc code) -> const char * {
  switch (code) {
  case Errc::ZeroInput: return "ZeroInput";
  case Errc::NegativeValue: return "NegativeValue";
  case Errc::ParseError: return "ParseError";
  case Errc::InvalidSet: return "InvalidSet";
  case Errc::NotAMember: return "NotAMember";
  case Errc::DuplicateRows: return "DuplicateRows";
  case Errc::NotPrime: return "NotPrime";
  case Errc::PrimesNotIncreasing: return "PrimesNotIncreasing";
  case Errc::NotSquare: return "NotSquare";
  case Errc::DimensionMismatch: return "DimensionMismatch";
  case Errc::Singular: return "Singular";
  case Errc::NotSymmetric: return "NotSymmetric";
  case Errc::TooLargeForExhaustiveMinors: return "TooLargeForExhaustiveMinors";
  case Errc::NotTn: return "NotTn";
  case Errc::IndexOrder: return "IndexOrder";
  case Errc::SingularDenominator: return "SingularDenominator";
  case Errc::SizeTooSmall: return "SizeTooSmall";
  case Errc::InvalidArgument: return "InvalidArgument";
  case Errc::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

} // namespace gcdtn
