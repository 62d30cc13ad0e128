#pragma once

#include "gcdtn/setmodel.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace gcdtn {

/// Every random draw in the project comes from here: std::mt19937_64 seeded
/// with a single 64-bit value. Bounded draws use rejection sampling on the
/// raw engine output, so a seed yields the same sequence on any conforming
/// standard library (std::uniform_int_distribution does not guarantee that).
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  auto next() -> std::uint64_t { return engine_(); }
  /// Uniform on the closed range [lo, hi].
  auto uniform(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t;
  auto coin() -> bool { return (next() >> 63) != 0; }

  template <typename T> void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(0, i - 1)]);
  }

private:
  std::mt19937_64 engine_;
};

auto first_primes(std::size_t k) -> std::vector<Nat>;

/// Symmetric Pascal matrix P_n as exponents over the given n primes.
auto pascal_exponents(std::size_t n, std::vector<Nat> primes) -> ExponentMatrix;

/// Row i is (1, b_i, b_i^2, ..., b_i^(k-1)) with k = primes.size(). Bases
/// must be positive and strictly increasing.
auto vandermonde_exponents(std::span<const unsigned long> bases, std::vector<Nat> primes)
  -> ExponentMatrix;

struct RandomMonotoneOptions {
  std::size_t n = 5;
  unsigned long max_exp = 6;
  std::size_t max_columns = 4;
  /// Defaults to the first max_columns primes when empty.
  std::vector<Nat> primes;
};

/// Draws k in [1, max_columns], a direction per column, and a sorted run of
/// n exponents in [0, max_exp] per column; draws with repeated rows are
/// rejected and redrawn from scratch.
auto random_column_monotone(SeededRng &rng, const RandomMonotoneOptions &opts) -> ExponentMatrix;

} // namespace gcdtn
