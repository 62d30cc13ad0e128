#pragma once

#include "gcdtn/numtheory.hpp"
#include "gcdtn/setmodel.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gcdtn {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
public:
  ExactMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch on ragged input.
  explicit ExactMatrix(const std::vector<std::vector<Rat>> &grid);
  static auto identity(std::size_t n) -> ExactMatrix;

  [[nodiscard]] auto rows() const noexcept -> std::size_t { return rows_; }
  [[nodiscard]] auto cols() const noexcept -> std::size_t { return cols_; }
  [[nodiscard]] auto is_square() const noexcept -> bool { return rows_ == cols_; }
  [[nodiscard]] auto operator()(std::size_t r, std::size_t c) const -> const Rat & {
    return entries_[r * cols_ + c];
  }
  auto operator()(std::size_t r, std::size_t c) -> Rat & { return entries_[r * cols_ + c]; }

  [[nodiscard]] auto transpose() const -> ExactMatrix;
  [[nodiscard]] auto is_symmetric() const -> bool;
  [[nodiscard]] auto is_integral() const -> bool;
  /// Submatrix on the given (sorted, in-range) row and column indices.
  [[nodiscard]] auto submatrix(const std::vector<std::size_t> &rows,
                               const std::vector<std::size_t> &cols) const -> ExactMatrix;

  friend auto operator*(const ExactMatrix &a, const ExactMatrix &b) -> ExactMatrix;
  friend auto operator==(const ExactMatrix &, const ExactMatrix &) -> bool = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> entries_;
};

auto gcd_matrix(const OrderedSet &s) -> ExactMatrix;
auto lcm_matrix(const OrderedSet &s) -> ExactMatrix;

/// Exact determinant by fraction-free elimination after clearing row
/// denominators. Throws NotSquare.
auto determinant(const ExactMatrix &m) -> Rat;

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rat value;
};

struct MinorCheck {
  bool nonnegative;
  std::optional<MinorWitness> witness; ///< first negative minor when not nonnegative
};

constexpr std::size_t kDefaultMinorCap = 8;

/// Exhaustive total-nonnegativity test. Minors are visited by increasing
/// size, then lexicographic row set, then lexicographic column set.
/// Throws NotSquare or TooLargeForExhaustiveMinors (n > size_cap).
auto all_minors_nonnegative(const ExactMatrix &m, std::size_t size_cap = kDefaultMinorCap)
  -> MinorCheck;

/// X with X * a == b. Throws NotSquare, DimensionMismatch or Singular.
auto solve_right(const ExactMatrix &a, const ExactMatrix &b) -> ExactMatrix;

/// Sylvester's criterion on leading principal minors. Throws NotSquare or
/// NotSymmetric.
auto is_positive_definite(const ExactMatrix &m) -> bool;

} // namespace gcdtn
