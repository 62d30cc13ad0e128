#pragma once

#include "gcdtn/error.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gcdtn {

/// Nonnegative integer of unbounded magnitude.
class Nat {
public:
  Nat() = default;
  Nat(unsigned long v) : v_(v) {} // NOLINT(google-explicit-constructor)
  explicit Nat(mpz_class v);

  /// Decimal digits only; no sign, no exponent notation.
  static auto parse(std::string_view text) -> Nat;

  [[nodiscard]] auto mpz() const noexcept -> const mpz_class & { return v_; }
  [[nodiscard]] auto str() const -> std::string { return v_.get_str(); }
  [[nodiscard]] auto is_zero() const noexcept -> bool { return sgn(v_) == 0; }
  [[nodiscard]] auto is_one() const noexcept -> bool { return v_ == 1; }
  [[nodiscard]] auto fits_u64() const noexcept -> bool;
  [[nodiscard]] auto to_u64() const -> std::uint64_t;

  /// True iff *this divides other. Zero divides only zero.
  [[nodiscard]] auto divides(const Nat &other) const -> bool;

  friend auto operator==(const Nat &a, const Nat &b) -> bool {
    return cmp(a.v_, b.v_) == 0;
  }
  friend auto operator<=>(const Nat &a, const Nat &b) -> std::strong_ordering {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }
  friend auto operator+(const Nat &a, const Nat &b) -> Nat {
    return Nat(mpz_class(a.v_ + b.v_));
  }
  friend auto operator*(const Nat &a, const Nat &b) -> Nat {
    return Nat(mpz_class(a.v_ * b.v_));
  }
  auto operator*=(const Nat &b) -> Nat & {
    v_ *= b.v_;
    return *this;
  }

private:
  mpz_class v_{0};
};

/// Exact quotient a / b; throws InternalConsistency when b does not divide a.
auto divexact(const Nat &a, const Nat &b) -> Nat;
auto pow(const Nat &base, unsigned long exponent) -> Nat;

/// Signed rational kept in lowest terms with a positive denominator.
class Rat {
public:
  Rat() = default;
  Rat(long v) : q_(v) {}              // NOLINT(google-explicit-constructor)
  Rat(const Nat &v) : q_(v.mpz()) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const mpz_class &v) : q_(v) {}
  Rat(const mpz_class &num, const mpz_class &den);
  explicit Rat(mpq_class q);

  /// Accepts "p/q" or "p" with an optional leading minus sign.
  static auto parse(std::string_view text) -> Rat;

  [[nodiscard]] auto num() const -> mpz_class { return q_.get_num(); }
  [[nodiscard]] auto den() const -> mpz_class { return q_.get_den(); }
  [[nodiscard]] auto mpq() const noexcept -> const mpq_class & { return q_; }
  [[nodiscard]] auto is_integer() const -> bool { return q_.get_den() == 1; }
  [[nodiscard]] auto is_zero() const -> bool { return sgn(q_) == 0; }
  [[nodiscard]] auto sign() const -> int { return sgn(q_); }
  /// "num/den", or "num" when the denominator is one.
  [[nodiscard]] auto str() const -> std::string;

  friend auto operator==(const Rat &a, const Rat &b) -> bool {
    return cmp(a.q_, b.q_) == 0;
  }
  friend auto operator<=>(const Rat &a, const Rat &b) -> std::strong_ordering {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }
  friend auto operator+(const Rat &a, const Rat &b) -> Rat {
    return Rat(mpq_class(a.q_ + b.q_));
  }
  friend auto operator-(const Rat &a, const Rat &b) -> Rat {
    return Rat(mpq_class(a.q_ - b.q_));
  }
  friend auto operator*(const Rat &a, const Rat &b) -> Rat {
    return Rat(mpq_class(a.q_ * b.q_));
  }
  friend auto operator/(const Rat &a, const Rat &b) -> Rat;
  friend auto operator-(const Rat &a) -> Rat { return Rat(mpq_class(-a.q_)); }
  auto operator+=(const Rat &b) -> Rat & {
    q_ += b.q_;
    return *this;
  }
  auto operator-=(const Rat &b) -> Rat & {
    q_ -= b.q_;
    return *this;
  }
  auto operator*=(const Rat &b) -> Rat & {
    q_ *= b.q_;
    return *this;
  }

private:
  mpq_class q_{0};
};

struct PrimePower {
  Nat prime;
  unsigned long exponent;

  friend auto operator==(const PrimePower &, const PrimePower &) -> bool = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
struct Factorization {
  std::vector<PrimePower> factors;

  [[nodiscard]] auto value() const -> Nat;
  friend auto operator==(const Factorization &, const Factorization &) -> bool = default;
};

auto gcd(const Nat &a, const Nat &b) -> Nat;
auto lcm(const Nat &a, const Nat &b) -> Nat;

/// Deterministic for n < 2^64, 40 Miller-Rabin rounds with fixed-seed bases above.
auto is_prime(const Nat &n) -> bool;
auto factorize(const Nat &x) -> Factorization;
auto totient(const Nat &x) -> Nat;
/// All positive divisors in increasing order.
auto divisors(const Nat &x) -> std::vector<Nat>;

} // namespace gcdtn
