#pragma once

#include "gcdtn/exactmatrix.hpp"
#include "gcdtn/setmodel.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace gcdtn {

enum class TnMethod { ColumnMonotone, TripleIdentity, ExhaustiveMinors };

auto method_name(TnMethod m) -> const char *;

/// Indices are zero-based here; serializers emit them one-based.
using TripleWitness = std::array<std::size_t, 3>;

/// Outcome of a total-nonnegativity test on (S), tied to the set it was
/// computed for. The closed forms below refuse a verdict that is negative
/// or that was issued for a different ordered set.
class TnVerdict {
public:
  using Witness = std::variant<std::monostate, TripleWitness, MinorWitness>;

  [[nodiscard]] auto is_tn() const noexcept -> bool { return is_tn_; }
  [[nodiscard]] auto method() const noexcept -> TnMethod { return method_; }
  [[nodiscard]] auto witness() const noexcept -> const Witness & { return witness_; }
  [[nodiscard]] auto subject() const noexcept -> const OrderedSet & { return subject_; }
  [[nodiscard]] auto certifies(const OrderedSet &s) const -> bool { return is_tn_ && subject_ == s; }

private:
  TnVerdict(OrderedSet subject, bool is_tn, TnMethod method, Witness witness)
    : subject_(std::move(subject)), is_tn_(is_tn), method_(method), witness_(std::move(witness)) {}

  friend auto check_tn_triple(const OrderedSet &s) -> TnVerdict;
  friend auto check_tn_pow(const OrderedSet &s) -> TnVerdict;
  friend auto check_tn_minors(const OrderedSet &s, std::size_t size_cap) -> TnVerdict;

  OrderedSet subject_;
  bool is_tn_;
  TnMethod method_;
  Witness witness_;
};

/// For every i <= j <= k checks (xi,xj)(xj,xk) = xj (xi,xk) together with
/// (xi,xk) = (xi,xj,xk) and xj (xi,xk) | xi xk; reports the first failing
/// triple. Sets with fewer than three elements are decided by minors.
auto check_tn_triple(const OrderedSet &s) -> TnVerdict;
/// TN iff every column of Pow(S) is monotone. The witness is the first
/// triple i < j < k at which some column turns.
auto check_tn_pow(const OrderedSet &s) -> TnVerdict;
/// Exhaustive minors of (S). Throws TooLargeForExhaustiveMinors.
auto check_tn_minors(const OrderedSet &s, std::size_t size_cap = kDefaultMinorCap) -> TnVerdict;

struct QuadrupleCheck {
  bool holds;
  /// First (i, j, k, l) with (xi,xk)(xj,xl) != (xi,xl)(xj,xk).
  std::optional<std::array<std::size_t, 4>> violation;
  /// First (i, j) with (xi,xj)(x1,xn) != (x1,xj)(xi,xn).
  std::optional<std::array<std::size_t, 2>> endpoint_violation;
};

/// Throws NotTn unless the verdict certifies s.
auto check_quadruple_identity(const OrderedSet &s, const TnVerdict &verdict) -> QuadrupleCheck;

/// [xi, xj] computed as (x1,xi)(xj,xn) / (x1,xn) for i <= j (zero-based).
/// Throws NotTn, IndexOrder, or InvalidArgument for an out-of-range index.
auto lcm_from_gcds(const OrderedSet &s, const TnVerdict &verdict, std::size_t i, std::size_t j)
  -> Nat;

/// (S)^-1 of a TN GCD matrix is symmetric tridiagonal.
struct TridiagonalInverse {
  std::vector<Rat> off_diagonal; ///< a2..an
  std::vector<Rat> diagonal;     ///< b1..bn

  [[nodiscard]] auto to_matrix() const -> ExactMatrix;
};

/// Throws NotTn, SizeTooSmall (n < 3) or SingularDenominator.
auto tridiagonal_inverse(const OrderedSet &s, const TnVerdict &verdict) -> TridiagonalInverse;
auto tridiagonal_inverse(const OrderedSet &s) -> TridiagonalInverse;

/// U = [S](S)^-1 assembled entrywise from gcds, with no linear solve.
/// Every entry is an exact integer; a non-exact division raises
/// InternalConsistency. Throws NotTn or SizeTooSmall (n < 3).
auto quotient_closed_form(const OrderedSet &s, const TnVerdict &verdict) -> ExactMatrix;
auto quotient_closed_form(const OrderedSet &s) -> ExactMatrix;

} // namespace gcdtn
