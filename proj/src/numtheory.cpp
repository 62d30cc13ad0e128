#include "gcdtn/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <map>

namespace gcdtn {

namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

auto small_primes() -> const std::vector<std::uint32_t> & {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kSieveLimit; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

auto miller_rabin_round(const mpz_class &n, const mpz_class &nm1,
                        const mpz_class &d, unsigned long s,
                        const mpz_class &base) -> bool {
  mpz_class x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

auto probably_prime(const mpz_class &n) -> bool {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  mpz_class nm1 = n - 1;
  mpz_class d = nm1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // The first twelve prime bases are a proven witness set below 3.3e24.
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (unsigned long b : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                            29ul, 31ul, 37ul})
      if (!miller_rabin_round(n, nm1, d, s, mpz_class(b))) return false;
    return true;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x9e3779b97f4a7c15ul);
  mpz_class span = n - 3;
  for (int round = 0; round < 40; ++round) {
    mpz_class base = rng.get_z_range(span) + 2;
    if (!miller_rabin_round(n, nm1, d, s, base)) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. n is odd, composite, and not a prime power
// of a sieved prime.
auto pollard_brent(const mpz_class &n) -> mpz_class {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    auto f = [&](mpz_class &v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          f(y);
          mpz_class diff = x - y;
          q *= abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        f(ys);
        mpz_class diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(const mpz_class &n, std::map<mpz_class, unsigned long> &acc) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++acc[n];
    return;
  }
  mpz_class root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_large(root, acc);
    split_large(root, acc);
    return;
  }
  mpz_class d = pollard_brent(n);
  split_large(d, acc);
  split_large(mpz_class(n / d), acc);
}

} // namespace

Nat::Nat(mpz_class v) : v_(std::move(v)) {
  if (sgn(v_) < 0)
    throw Error(Errc::NegativeValue, "negative value " + v_.get_str() +
                                         " where a natural number is required");
}

auto Nat::parse(std::string_view text) -> Nat {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw Error(Errc::ParseError,
                "expected a decimal natural number, got '" + std::string(text) + "'");
  return Nat(mpz_class(std::string(text), 10));
}

auto Nat::fits_u64() const noexcept -> bool {
  return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64;
}

auto Nat::to_u64() const -> std::uint64_t {
  if (!fits_u64())
    throw Error(Errc::InvalidArgument, "value " + str() + " exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v_.get_mpz_t());
  return out;
}

auto Nat::divides(const Nat &other) const -> bool {
  if (is_zero()) return other.is_zero();
  return mpz_divisible_p(other.v_.get_mpz_t(), v_.get_mpz_t()) != 0;
}

auto divexact(const Nat &a, const Nat &b) -> Nat {
  if (!b.divides(a) || b.is_zero())
    throw Error(Errc::InternalConsistency,
                b.str() + " does not divide " + a.str() + " exactly");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Nat(std::move(q));
}

auto pow(const Nat &base, unsigned long exponent) -> Nat {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Nat(std::move(out));
}

Rat::Rat(const mpz_class &num, const mpz_class &den) : q_(num, den) {
  if (sgn(den) == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

auto Rat::parse(std::string_view text) -> Rat {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_int(num))
    throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rat(mpz_class(std::string(num), 10));
  std::string_view den = text.substr(slash + 1);
  if (!is_int(den) || den.front() == '-')
    throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
  return Rat(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
}

auto Rat::str() const -> std::string {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

auto operator/(const Rat &a, const Rat &b) -> Rat {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
  return Rat(mpq_class(a.q_ / b.q_));
}

auto Factorization::value() const -> Nat {
  Nat out(1);
  for (const auto &[p, e] : factors) out *= pow(p, e);
  return out;
}

auto gcd(const Nat &a, const Nat &b) -> Nat {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Nat(std::move(g));
}

auto lcm(const Nat &a, const Nat &b) -> Nat {
  if (a.is_zero() || b.is_zero())
    throw Error(Errc::ZeroInput, "lcm is defined for positive integers only");
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Nat(std::move(l));
}

auto is_prime(const Nat &n) -> bool { return probably_prime(n.mpz()); }

auto factorize(const Nat &x) -> Factorization {
  if (x.is_zero()) throw Error(Errc::ZeroInput, "cannot factorize zero");
  mpz_class n = x.mpz();
  std::map<mpz_class, unsigned long> acc;
  bool exhausted = true;
  for (std::uint32_t p : small_primes()) {
    if (n == 1) break;
    if (n < mpz_class(std::uint64_t{p} * p)) {
      exhausted = false;
      break;
    }
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    acc[mpz_class(p)] = e;
  }
  if (n != 1) {
    if (!exhausted)
      ++acc[n]; // no factor up to sqrt(n)
    else
      split_large(n, acc);
  }
  Factorization out;
  out.factors.reserve(acc.size());
  for (auto &[p, e] : acc) out.factors.push_back({Nat(p), e});
  return out;
}

auto totient(const Nat &x) -> Nat {
  if (x.is_zero()) throw Error(Errc::ZeroInput, "totient of zero is undefined");
  mpz_class out = 1;
  for (const auto &[p, e] : factorize(x).factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.mpz().get_mpz_t(), e - 1);
    out *= pe * (p.mpz() - 1);
  }
  return Nat(std::move(out));
}

auto divisors(const Nat &x) -> std::vector<Nat> {
  std::vector<Nat> out{Nat(1)};
  for (const auto &[p, e] : factorize(x).factors) {
    const std::size_t base = out.size();
    Nat pk(1);
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace gcdtn
