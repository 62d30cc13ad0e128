#include "gcdtn/divisibility.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace gcdtn {

auto side_name(Side s) -> const char * {
  switch (s) {
  case Side::Left: return "Left";
  case Side::Right: return "Right";
  case Side::Both: return "Both";
  }
  return "?";
}

auto division_method_name(DivisionMethod m) -> const char * {
  return m == DivisionMethod::Oracle ? "Oracle" : "ClosedForm";
}

auto DivisibilityReport::left_witness() const -> ExactMatrix {
  if (!witness) throw Error(Errc::InvalidArgument, "no witness: (S) does not divide [S]");
  return witness->transpose();
}

auto divide_oracle(const OrderedSet &s) -> DivisibilityReport {
  ExactMatrix c = solve_right(gcd_matrix(s), lcm_matrix(s));
  DivisibilityReport report;
  report.method = DivisionMethod::Oracle;
  for (std::size_t i = 0; i < c.rows() && !report.violation; ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (!c(i, j).is_integer()) {
        report.violation = QuotientViolation{i, j, c(i, j)};
        break;
      }
  report.divides = !report.violation;
  if (report.divides) report.witness = std::move(c);
  return report;
}

auto divide_via_closed_form(const OrderedSet &s, const TnVerdict &verdict) -> DivisibilityReport {
  DivisibilityReport report;
  report.method = DivisionMethod::ClosedForm;
  report.witness = quotient_closed_form(s, verdict);
  report.divides = true;
  return report;
}

auto divide_via_closed_form(const OrderedSet &s) -> DivisibilityReport {
  return divide_via_closed_form(s, check_tn_triple(s));
}

auto divide_power(const OrderedSet &s, unsigned long e) -> DivisibilityReport {
  return divide_oracle(power_set(s, e));
}

namespace {

struct GcdClosedWalker {
  std::size_t n;
  std::uint64_t bound;
  std::size_t budget;
  SearchOutcome out;
  std::vector<std::uint64_t> chosen;
  std::uint64_t top = 0;

  [[nodiscard]] auto member(std::uint64_t v) const -> bool {
    return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
  }

  // Elements are added in increasing order, so every gcd with a new element
  // x other than x itself is smaller and must already be present.
  [[nodiscard]] auto admissible(std::uint64_t x) const -> bool {
    const std::uint64_t gt = std::gcd(x, top);
    if (gt != x && !member(gt)) return false;
    return std::all_of(chosen.begin(), chosen.end(),
                       [&](std::uint64_t y) { return member(std::gcd(x, y)); });
  }

  // Returns true when the walk should stop.
  auto test_candidate() -> bool {
    std::vector<Nat> elems(chosen.begin(), chosen.end());
    elems.emplace_back(top);
    OrderedSet s(std::move(elems));
    ++out.tested;
    const bool divides = divide_oracle(s).divides;
    if (max_greatest_type_count(s) <= 1) {
      if (!divides)
        throw Error(Errc::InternalConsistency,
                    "gcd-closed set with single greatest-type divisors failed to divide");
      ++out.single_gtd_confirmed;
    }
    if (!divides) {
      out.witness = std::move(s);
      return true;
    }
    return out.tested >= budget;
  }

  auto extend(std::uint64_t from) -> bool {
    if (chosen.size() + 1 == n) return test_candidate();
    for (std::uint64_t x = from; x < top; ++x) {
      if (!admissible(x)) continue;
      chosen.push_back(x);
      const bool stop = extend(x + 1);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  }

  void run() {
    if (n == 0 || budget == 0) return;
    for (top = 1; top <= bound; ++top)
      if (extend(1)) return;
  }
};

} // namespace

auto search_gcd_closed_nondivisor(std::size_t n, const Nat &element_bound, std::size_t budget)
  -> SearchOutcome {
  if (!element_bound.fits_u64())
    throw Error(Errc::InvalidArgument, "element bound must fit in 64 bits");
  GcdClosedWalker walker{n, element_bound.to_u64(), budget, {}, {}, 0};
  walker.run();
  return std::move(walker.out);
}

} // namespace gcdtn
