#include "gcdtn/generate.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace gcdtn {

auto SeededRng::uniform(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
  if (lo > hi) throw Error(Errc::InvalidArgument, "empty range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return lo + draw % range;
}

auto first_primes(std::size_t k) -> std::vector<Nat> {
  std::vector<Nat> out;
  for (unsigned long c = 2; out.size() < k; ++c)
    if (is_prime(Nat(c))) out.emplace_back(c);
  return out;
}

auto pascal_exponents(std::size_t n, std::vector<Nat> primes) -> ExponentMatrix {
  if (primes.size() != n)
    throw Error(Errc::DimensionMismatch, "the Pascal pattern needs exactly n primes");
  ExponentMatrix m;
  m.primes = std::move(primes);
  m.exponents.assign(n, std::vector<unsigned long>(n, 1));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      m.exponents[i][j] = m.exponents[i - 1][j] + m.exponents[i][j - 1];
  return m;
}

auto vandermonde_exponents(std::span<const unsigned long> bases, std::vector<Nat> primes)
  -> ExponentMatrix {
  for (std::size_t i = 0; i < bases.size(); ++i)
    if (bases[i] == 0 || (i > 0 && bases[i] <= bases[i - 1]))
      throw Error(Errc::InvalidArgument, "Vandermonde bases must be positive and increasing");
  ExponentMatrix m;
  m.primes = std::move(primes);
  for (unsigned long b : bases) {
    std::vector<unsigned long> row;
    unsigned long v = 1;
    for (std::size_t c = 0; c < m.primes.size(); ++c) {
      row.push_back(v);
      if (c + 1 < m.primes.size() && v > std::numeric_limits<unsigned long>::max() / b)
        throw Error(Errc::InvalidArgument, "Vandermonde exponent overflows");
      v *= b;
    }
    m.exponents.push_back(std::move(row));
  }
  return m;
}

auto random_column_monotone(SeededRng &rng, const RandomMonotoneOptions &opts) -> ExponentMatrix {
  if (opts.n == 0 || opts.max_columns == 0)
    throw Error(Errc::InvalidArgument, "need at least one row and one column");
  std::vector<Nat> primes = opts.primes.empty() ? first_primes(opts.max_columns) : opts.primes;
  if (primes.size() < opts.max_columns)
    throw Error(Errc::InvalidArgument, "fewer primes than max_columns");

  constexpr int kMaxAttempts = 100'000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, opts.max_columns));
    ExponentMatrix m;
    m.primes.assign(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(k));
    m.exponents.assign(opts.n, std::vector<unsigned long>(k));
    for (std::size_t c = 0; c < k; ++c) {
      const bool down = rng.coin();
      std::vector<unsigned long> col(opts.n);
      for (auto &v : col) v = rng.uniform(0, opts.max_exp);
      std::sort(col.begin(), col.end());
      if (down) std::reverse(col.begin(), col.end());
      for (std::size_t r = 0; r < opts.n; ++r) m.exponents[r][c] = col[r];
    }
    std::set<std::vector<unsigned long>> distinct(m.exponents.begin(), m.exponents.end());
    if (distinct.size() == opts.n) return m;
  }
  throw Error(Errc::InvalidArgument, "could not draw distinct rows; raise max_exp or max_columns");
}

} // namespace gcdtn
