#include "gcdtn/tncore.hpp"

namespace gcdtn {

auto method_name(TnMethod m) -> const char * {
  switch (m) {
  case TnMethod::ColumnMonotone: return "ColumnMonotone";
  case TnMethod::TripleIdentity: return "TripleIdentity";
  case TnMethod::ExhaustiveMinors: return "ExhaustiveMinors";
  }
  return "?";
}

namespace {

void require_tn(const OrderedSet &s, const TnVerdict &verdict) {
  if (!verdict.certifies(s))
    throw Error(Errc::NotTn, "the GCD matrix of this ordered set is not certified totally nonnegative");
}

void require_size(const OrderedSet &s) {
  if (s.size() < 3)
    throw Error(Errc::SizeTooSmall, "closed forms need at least three elements");
}

} // namespace

auto check_tn_triple(const OrderedSet &s) -> TnVerdict {
  const std::size_t n = s.size();
  if (n < 3) {
    TnVerdict v = check_tn_minors(s);
    return v;
  }
  // (xi,xj) for all pairs, computed once.
  std::vector<std::vector<Nat>> g(n, std::vector<Nat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = gcd(s[i], s[j]);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        const bool product_identity = g[i][j] * g[j][k] == s[j] * g[i][k];
        const bool triple_gcd = g[i][k] == gcd(g[i][j], s[k]);
        const bool divisibility = (s[j] * g[i][k]).divides(s[i] * s[k]);
        if (!(product_identity && triple_gcd && divisibility))
          return {s, false, TnMethod::TripleIdentity, TripleWitness{i, j, k}};
      }
    }
  }
  return {s, true, TnMethod::TripleIdentity, std::monostate{}};
}

auto check_tn_pow(const OrderedSet &s) -> TnVerdict {
  const ExponentMatrix m = pow_matrix(s);
  if (is_column_monotone(m).monotone) return {s, true, TnMethod::ColumnMonotone, std::monostate{}};
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          const long a = static_cast<long>(m.exponents[i][c]);
          const long b = static_cast<long>(m.exponents[j][c]);
          const long d = static_cast<long>(m.exponents[k][c]);
          if ((b - a) * (d - b) < 0) return {s, false, TnMethod::ColumnMonotone, TripleWitness{i, j, k}};
        }
  throw Error(Errc::InternalConsistency, "non-monotone column without a turning triple");
}

auto check_tn_minors(const OrderedSet &s, std::size_t size_cap) -> TnVerdict {
  MinorCheck check = all_minors_nonnegative(gcd_matrix(s), size_cap);
  if (check.nonnegative) return {s, true, TnMethod::ExhaustiveMinors, std::monostate{}};
  return {s, false, TnMethod::ExhaustiveMinors, std::move(*check.witness)};
}

auto check_quadruple_identity(const OrderedSet &s, const TnVerdict &verdict) -> QuadrupleCheck {
  require_tn(s, verdict);
  const std::size_t n = s.size();
  std::vector<std::vector<Nat>> g(n, std::vector<Nat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = gcd(s[i], s[j]);

  QuadrupleCheck out{true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < n && !out.violation; ++i)
    for (std::size_t j = i; j < n && !out.violation; ++j)
      for (std::size_t k = j; k < n && !out.violation; ++k)
        for (std::size_t l = k; l < n; ++l)
          if (g[i][k] * g[j][l] != g[i][l] * g[j][k]) {
            out.violation = std::array<std::size_t, 4>{i, j, k, l};
            break;
          }
  const std::size_t last = n - 1;
  for (std::size_t i = 0; i < n && !out.endpoint_violation; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (g[i][j] * g[0][last] != g[0][j] * g[i][last]) {
        out.endpoint_violation = std::array<std::size_t, 2>{i, j};
        break;
      }
  out.holds = !out.violation && !out.endpoint_violation;
  return out;
}

auto lcm_from_gcds(const OrderedSet &s, const TnVerdict &verdict, std::size_t i, std::size_t j)
  -> Nat {
  require_tn(s, verdict);
  const std::size_t n = s.size();
  if (i >= n || j >= n) throw Error(Errc::InvalidArgument, "index out of range");
  if (i > j) throw Error(Errc::IndexOrder, "lcm_from_gcds requires i <= j");
  return divexact(gcd(s[0], s[i]) * gcd(s[j], s[n - 1]), gcd(s[0], s[n - 1]));
}

auto TridiagonalInverse::to_matrix() const -> ExactMatrix {
  const std::size_t n = diagonal.size();
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = diagonal[i];
  for (std::size_t i = 0; i + 1 < n; ++i) out(i, i + 1) = out(i + 1, i) = off_diagonal[i];
  return out;
}

auto tridiagonal_inverse(const OrderedSet &s, const TnVerdict &verdict) -> TridiagonalInverse {
  require_tn(s, verdict);
  require_size(s);
  const std::size_t n = s.size();
  // Zero-based: x[0] is x1, x[n-1] is xn.
  auto g = [&](std::size_t i, std::size_t j) { return Rat(gcd(s[i], s[j])); };
  const std::size_t last = n - 1;
  const Rat g1n = g(0, last);

  TridiagonalInverse out;
  out.off_diagonal.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Rat denom = g(i, last) * g(0, i + 1) - g(i + 1, last) * g(0, i);
    if (denom.is_zero())
      throw Error(Errc::SingularDenominator,
                  "zero denominator for off-diagonal entry a" + std::to_string(i + 2));
    out.off_diagonal.push_back(g1n / denom);
  }
  // a(i) below is the one-based a_i, stored at off_diagonal[i - 2].
  auto a = [&](std::size_t one_based) -> const Rat & { return out.off_diagonal[one_based - 2]; };

  out.diagonal.reserve(n);
  out.diagonal.push_back(-(g(1, last) / g1n) * a(2));
  for (std::size_t i = 1; i < last; ++i) {
    const Rat numer = g(i - 1, last) * g(0, i + 1) - g(i + 1, last) * g(0, i - 1);
    out.diagonal.push_back(-(numer / g1n) * a(i + 1) * a(i + 2));
  }
  out.diagonal.push_back(-(g(0, last - 1) / g1n) * a(n));
  return out;
}

auto tridiagonal_inverse(const OrderedSet &s) -> TridiagonalInverse {
  return tridiagonal_inverse(s, check_tn_triple(s));
}

auto quotient_closed_form(const OrderedSet &s, const TnVerdict &verdict) -> ExactMatrix {
  require_tn(s, verdict);
  require_size(s);
  const std::size_t n = s.size();
  const std::size_t last = n - 1;
  const Nat g1n = gcd(s[0], s[last]);

  ExactMatrix u(n, n);
  for (std::size_t i = 1; i < last; ++i) u(i, i) = Rat(-1);
  // First column.
  u(1, 0) = Rat(divexact(s[1], gcd(s[0], s[1])));
  for (std::size_t i = 2; i < n; ++i) u(i, 0) = Rat(divexact(gcd(s[i], s[last]), g1n));
  // Last column.
  u(last - 1, last) = Rat(divexact(s[last - 1], gcd(s[last - 1], s[last])));
  for (std::size_t i = 0; i + 1 < last; ++i) u(i, last) = Rat(divexact(gcd(s[0], s[i]), g1n));
  return u;
}

auto quotient_closed_form(const OrderedSet &s) -> ExactMatrix {
  return quotient_closed_form(s, check_tn_triple(s));
}

} // namespace gcdtn
