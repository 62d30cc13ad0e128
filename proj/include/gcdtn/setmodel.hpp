#pragma once

#include "gcdtn/numtheory.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gcdtn {

/// Ordered list of distinct positive integers. Order is significant: two
/// sets with the same members in a different order are different values.
class OrderedSet {
public:
  /// Throws InvalidSet on an empty list, a zero element, or a repeat.
  explicit OrderedSet(std::vector<Nat> elements);
  OrderedSet(std::initializer_list<unsigned long> elements);

  [[nodiscard]] auto size() const noexcept -> std::size_t { return elements_.size(); }
  [[nodiscard]] auto elements() const noexcept -> std::span<const Nat> { return elements_; }
  [[nodiscard]] auto operator[](std::size_t i) const -> const Nat & { return elements_[i]; }
  [[nodiscard]] auto contains(const Nat &x) const -> bool;
  [[nodiscard]] auto index_of(const Nat &x) const -> std::optional<std::size_t>;

  friend auto operator==(const OrderedSet &, const OrderedSet &) -> bool = default;

private:
  std::vector<Nat> elements_;
};

/// Pow(S): exponent of each listed prime in each element, one row per element.
struct ExponentMatrix {
  std::vector<Nat> primes;
  std::vector<std::vector<unsigned long>> exponents;

  [[nodiscard]] auto rows() const noexcept -> std::size_t { return exponents.size(); }
  [[nodiscard]] auto cols() const noexcept -> std::size_t { return primes.size(); }

  friend auto operator==(const ExponentMatrix &, const ExponentMatrix &) -> bool = default;
};

/// A bijection on {0,..,n-1}; image[i] is the index of the source element
/// placed at position i.
class Permutation {
public:
  explicit Permutation(std::vector<std::size_t> image);
  static auto identity(std::size_t n) -> Permutation;

  [[nodiscard]] auto image() const noexcept -> std::span<const std::size_t> { return image_; }
  [[nodiscard]] auto size() const noexcept -> std::size_t { return image_.size(); }
  [[nodiscard]] auto apply(const OrderedSet &s) const -> OrderedSet;

  friend auto operator==(const Permutation &, const Permutation &) -> bool = default;

private:
  std::vector<std::size_t> image_;
};

enum class ColumnDirection { Constant, Up, Down, Mixed };

auto direction_name(ColumnDirection d) -> const char *;

struct MonotoneReport {
  bool monotone;
  std::vector<ColumnDirection> directions;
};

auto pow_matrix(const OrderedSet &s) -> ExponentMatrix;
auto is_column_monotone(const ExponentMatrix &m) -> MonotoneReport;

/// Lexicographically smallest permutation that makes Pow column monotone,
/// or nullopt when none exists.
auto find_monotone_order(const OrderedSet &s) -> std::optional<Permutation>;

auto is_gcd_closed(const OrderedSet &s) -> bool;
auto is_factor_closed(const OrderedSet &s) -> bool;
/// G_S(y): maximal proper divisors of y inside s. Throws NotAMember.
auto greatest_type_divisors(const OrderedSet &s, const Nat &y) -> std::vector<Nat>;
/// max over y in s of |G_S(y)|.
auto max_greatest_type_count(const OrderedSet &s) -> std::size_t;

using ChainPartition = std::vector<std::vector<Nat>>;

/// Splits s into divisor chains that are pairwise coprime across blocks.
/// Each block is listed in divisibility order; blocks follow the first
/// appearance of their members in s. The element 1 gets its own block.
/// nullopt when s is not of this form.
auto classify_coprime_divisor_chains(const OrderedSet &s) -> std::optional<ChainPartition>;

/// Elementwise e-th power, order preserved.
auto power_set(const OrderedSet &s, unsigned long e) -> OrderedSet;

/// Inverse of pow_matrix. Throws NotPrime, PrimesNotIncreasing, DuplicateRows
/// or DimensionMismatch on a malformed matrix.
auto reconstruct(const ExponentMatrix &m) -> OrderedSet;

} // namespace gcdtn
