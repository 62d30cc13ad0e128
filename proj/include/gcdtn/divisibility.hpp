#pragma once

#include "gcdtn/exactmatrix.hpp"
#include "gcdtn/setmodel.hpp"
#include "gcdtn/tncore.hpp"

#include <cstddef>
#include <optional>

namespace gcdtn {

enum class Side { Left, Right, Both };
enum class DivisionMethod { Oracle, ClosedForm };

auto side_name(Side s) -> const char *;
auto division_method_name(DivisionMethod m) -> const char *;

struct QuotientViolation {
  std::size_t row; ///< zero-based
  std::size_t col; ///< zero-based
  Rat value;
};

/// Whether (S) divides [S] in M_n(Z). Both matrices are symmetric, so left
/// and right divisibility coincide and side is always Both.
struct DivisibilityReport {
  bool divides = false;
  Side side = Side::Both;
  DivisionMethod method = DivisionMethod::Oracle;
  /// Right quotient C with C (S) = [S]; present iff divides.
  std::optional<ExactMatrix> witness;
  /// First non-integral quotient entry in row-major order; present iff !divides.
  std::optional<QuotientViolation> violation;

  /// (S) C^T = [S]. Throws InvalidArgument when there is no witness.
  [[nodiscard]] auto left_witness() const -> ExactMatrix;
};

/// Exact linear solve of C (S) = [S], then an integrality check.
auto divide_oracle(const OrderedSet &s) -> DivisibilityReport;

/// Builds the quotient from the closed form; no linear solve.
/// Throws NotTn or SizeTooSmall.
auto divide_via_closed_form(const OrderedSet &s, const TnVerdict &verdict) -> DivisibilityReport;
auto divide_via_closed_form(const OrderedSet &s) -> DivisibilityReport;

/// Divisibility report for S^e.
auto divide_power(const OrderedSet &s, unsigned long e) -> DivisibilityReport;

struct SearchOutcome {
  std::optional<OrderedSet> witness;
  std::size_t tested = 0;
  /// Candidates with max |G_S(x)| = 1 (all confirmed as divisors).
  std::size_t single_gtd_confirmed = 0;
};

/// Walks gcd-closed sets of the given size with elements <= element_bound in
/// a fixed order: by largest element, then lexicographically on the
/// ascending remaining elements. Returns the first set whose GCD matrix does
/// not divide its LCM matrix. budget caps the number of sets tested.
auto search_gcd_closed_nondivisor(std::size_t n, const Nat &element_bound, std::size_t budget)
  -> SearchOutcome;

} // namespace gcdtn
