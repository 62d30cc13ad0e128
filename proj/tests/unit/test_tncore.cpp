#include "gcdtn/generate.hpp"
#include "gcdtn/tncore.hpp"

#include "../oracles.hpp"

#include <doctest.h>

using namespace gcdtn;

namespace {

auto q(long n, long d) -> Rat { return Rat(mpz_class(n), mpz_class(d)); }

auto mat(std::initializer_list<std::initializer_list<long>> rows) -> ExactMatrix {
  std::vector<std::vector<Rat>> grid;
  for (auto r : rows) grid.emplace_back(r.begin(), r.end());
  return ExactMatrix(grid);
}

auto pascal_set() -> OrderedSet { return reconstruct(pascal_exponents(4, first_primes(4))); }

auto random_tn_set(SeededRng &rng, std::size_t n) -> OrderedSet {
  RandomMonotoneOptions opts;
  opts.n = n;
  return reconstruct(random_column_monotone(rng, opts));
}

template <typename F> void expect_code(F &&fn, Errc code) {
  try {
    fn();
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == code);
  }
}

} // namespace

TEST_SUITE("tncore") {

TEST_CASE("triple identity verdicts") {
  const TnVerdict good = check_tn_triple(OrderedSet{2, 6, 12});
  CHECK(good.is_tn());
  CHECK(good.method() == TnMethod::TripleIdentity);
  CHECK(std::holds_alternative<std::monostate>(good.witness()));

  const TnVerdict bad = check_tn_triple(OrderedSet{2, 3, 4});
  CHECK_FALSE(bad.is_tn());
  REQUIRE(std::holds_alternative<TripleWitness>(bad.witness()));
  CHECK(std::get<TripleWitness>(bad.witness()) == TripleWitness{0, 1, 2});

  CHECK(check_tn_triple(OrderedSet{3, 9, 27, 54, 540}).is_tn());
  CHECK(check_tn_triple(OrderedSet{540, 54, 27, 9, 3}).is_tn());

  // Small sets fall back to minors.
  const TnVerdict small = check_tn_triple(OrderedSet{4, 6});
  CHECK(small.is_tn());
  CHECK(small.method() == TnMethod::ExhaustiveMinors);
}

TEST_CASE("pow-based verdict reports a turning triple") {
  const TnVerdict v = check_tn_pow(OrderedSet{2, 3, 4});
  CHECK_FALSE(v.is_tn());
  CHECK(v.method() == TnMethod::ColumnMonotone);
  CHECK(std::get<TripleWitness>(v.witness()) == TripleWitness{0, 1, 2});
  CHECK(check_tn_pow(OrderedSet{81, 54, 600, 6000, 4000}).is_tn());
}

TEST_CASE("three deciders agree") {
  SeededRng rng(41);
  int tn_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.uniform(1, 6);
    OrderedSet s = trial % 3 == 0 ? oracle::random_plain_set(rng, n, 200) : random_tn_set(rng, n);
    if (trial % 3 == 2 && n > 2) {
      std::vector<Nat> v(s.elements().begin(), s.elements().end());
      rng.shuffle(v);
      s = OrderedSet(v);
    }
    const bool a = check_tn_triple(s).is_tn();
    const bool b = check_tn_pow(s).is_tn();
    const bool c = check_tn_minors(s).is_tn();
    CHECK(a == b);
    CHECK(a == c);
    tn_count += a;
  }
  CHECK(tn_count > 30);
  CHECK(tn_count < 300);
}

TEST_CASE("quadruple identity") {
  const OrderedSet s{2, 6, 12};
  const QuadrupleCheck r = check_quadruple_identity(s, check_tn_triple(s));
  CHECK(r.holds);
  const OrderedSet p = pascal_set();
  CHECK(check_quadruple_identity(p, check_tn_triple(p)).holds);
  const OrderedSet bad{2, 3, 4};
  expect_code([&] { (void)check_quadruple_identity(bad, check_tn_triple(bad)); }, Errc::NotTn);
  // A verdict for another set is refused.
  expect_code([&] { (void)check_quadruple_identity(p, check_tn_triple(s)); }, Errc::NotTn);
}

TEST_CASE("lcm from gcds") {
  const OrderedSet s{2, 6, 12};
  const TnVerdict v = check_tn_triple(s);
  CHECK(lcm_from_gcds(s, v, 0, 1) == Nat(6));
  CHECK(lcm_from_gcds(s, v, 0, 0) == Nat(2));
  CHECK(lcm_from_gcds(s, v, 1, 2) == Nat(12));
  expect_code([&] { (void)lcm_from_gcds(s, v, 2, 1); }, Errc::IndexOrder);
  expect_code([&] { (void)lcm_from_gcds(s, v, 0, 3); }, Errc::InvalidArgument);

  SeededRng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const OrderedSet t = random_tn_set(rng, rng.uniform(1, 7));
    const TnVerdict tv = check_tn_triple(t);
    REQUIRE(tv.is_tn());
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i; j < t.size(); ++j) CHECK(lcm_from_gcds(t, tv, i, j) == lcm(t[i], t[j]));
  }
}

TEST_CASE("tridiagonal inverse of {2,6,12}") {
  const OrderedSet s{2, 6, 12};
  const TridiagonalInverse t = tridiagonal_inverse(s);
  CHECK(t.off_diagonal == std::vector{q(-1, 4), q(-1, 6)});
  CHECK(t.diagonal == std::vector{q(3, 4), q(5, 12), q(1, 6)});
  CHECK(t.to_matrix() * gcd_matrix(s) == ExactMatrix::identity(3));
}

TEST_CASE("tridiagonal inverse errors") {
  expect_code([] { (void)tridiagonal_inverse(OrderedSet{2, 3, 4}); }, Errc::NotTn);
  expect_code([] { (void)tridiagonal_inverse(OrderedSet{2, 6}); }, Errc::SizeTooSmall);
}

TEST_CASE("tridiagonal inverse matches the exact inverse") {
  SeededRng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const OrderedSet s = random_tn_set(rng, rng.uniform(3, 7));
    const TridiagonalInverse t = tridiagonal_inverse(s);
    for (const Rat &a : t.off_diagonal) CHECK_FALSE(a.is_zero());
    CHECK(t.to_matrix() == solve_right(gcd_matrix(s), ExactMatrix::identity(s.size())));
  }
}

TEST_CASE("closed-form quotient") {
  const OrderedSet s{2, 6, 12};
  const ExactMatrix u = quotient_closed_form(s);
  CHECK(u == mat({{0, 0, 1}, {3, -1, 1}, {6, 0, 0}}));
  // Entry (n-1, n) is x_{n-1}/(x_{n-1}, x_n) = 1, not x_{n-1}/(x_1, x_n) = 3.
  CHECK(u(1, 2) == Rat(1));

  const OrderedSet p = pascal_set();
  const ExactMatrix up = quotient_closed_form(p);
  CHECK(up.is_integral());
  CHECK(up * gcd_matrix(p) == lcm_matrix(p));
  CHECK(up == solve_right(gcd_matrix(p), lcm_matrix(p)));
  CHECK(up(1, 0) == Rat(25725));

  expect_code([] { (void)quotient_closed_form(OrderedSet{2, 3, 4}); }, Errc::NotTn);
  expect_code([] { (void)quotient_closed_form(OrderedSet{1, 2}); }, Errc::SizeTooSmall);
}

TEST_CASE("closed-form quotient structure over random TN sets") {
  SeededRng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const OrderedSet s = random_tn_set(rng, rng.uniform(3, 8));
    const std::size_t n = s.size();
    const ExactMatrix u = quotient_closed_form(s);
    CHECK(u == solve_right(gcd_matrix(s), lcm_matrix(s)));
    CHECK(u(0, 0).is_zero());
    CHECK(u(n - 1, n - 1).is_zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != 0 && j != n - 1 && j != i) CHECK(u(i, j).is_zero());
    for (std::size_t j = 1; j + 1 < n; ++j) {
      Rat col_sum(0);
      for (std::size_t i = 0; i < n; ++i) col_sum += u(i, j);
      CHECK(col_sum == Rat(-1));
    }
  }
}

}
