#include "gcdtn/divisibility.hpp"
#include "gcdtn/generate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gcdtn;

namespace {

// Python ints cross the boundary as decimal strings so magnitude is never lost.
auto to_nat(const py::int_ &v) -> Nat { return Nat::parse(py::str(v).cast<std::string>()); }

auto to_py(const Nat &v) -> py::int_ {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

auto to_py(const Rat &v) -> py::object {
  py::int_ num = py::reinterpret_steal<py::int_>(PyLong_FromString(v.num().get_str().c_str(), nullptr, 10));
  if (v.is_integer()) return std::move(num);
  py::int_ den = py::reinterpret_steal<py::int_>(PyLong_FromString(v.den().get_str().c_str(), nullptr, 10));
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(num, den);
}

auto to_set(const std::vector<py::int_> &xs) -> OrderedSet {
  std::vector<Nat> out;
  out.reserve(xs.size());
  for (const auto &x : xs) out.push_back(to_nat(x));
  return OrderedSet(std::move(out));
}

auto to_py(const OrderedSet &s) -> py::list {
  py::list out;
  for (const auto &x : s.elements()) out.append(to_py(x));
  return out;
}

auto to_py(const ExactMatrix &m) -> py::list {
  py::list out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_py(m(r, c)));
    out.append(row);
  }
  return out;
}

auto to_py(const ExponentMatrix &m) -> py::tuple {
  py::list primes;
  for (const auto &p : m.primes) primes.append(to_py(p));
  return py::make_tuple(primes, py::cast(m.exponents));
}

auto to_py(const DivisibilityReport &r) -> py::dict {
  py::dict out;
  out["divides"] = r.divides;
  out["side"] = side_name(r.side);
  out["method"] = division_method_name(r.method);
  out["witness"] = r.witness ? py::object(to_py(*r.witness)) : py::none();
  if (r.violation)
    out["violation"] = py::make_tuple(r.violation->row, r.violation->col, to_py(r.violation->value));
  else
    out["violation"] = py::none();
  return out;
}

auto to_exponents(const std::vector<py::int_> &primes, std::vector<std::vector<unsigned long>> rows)
  -> ExponentMatrix {
  ExponentMatrix m;
  for (const auto &p : primes) m.primes.push_back(to_nat(p));
  m.exponents = std::move(rows);
  return m;
}

} // namespace

PYBIND11_MODULE(_gcdtn, m) {
  m.doc() = "Exact GCD/LCM matrix analysis";

  // The module keeps the type alive, so a borrowed pointer is enough.
  static PyObject *error_type = py::exception<Error>(m, "GcdtnError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error &e) {
      PyErr_SetString(error_type, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  using Ints = std::vector<py::int_>;

  m.def("gcd", [](const py::int_ &a, const py::int_ &b) { return to_py(gcd(to_nat(a), to_nat(b))); });
  m.def("lcm", [](const py::int_ &a, const py::int_ &b) { return to_py(lcm(to_nat(a), to_nat(b))); });
  m.def("is_prime", [](const py::int_ &x) { return is_prime(to_nat(x)); });
  m.def("totient", [](const py::int_ &x) { return to_py(totient(to_nat(x))); });
  m.def("factorize", [](const py::int_ &x) {
    py::list out;
    for (const auto &f : factorize(to_nat(x)).factors) out.append(py::make_tuple(to_py(f.prime), f.exponent));
    return out;
  }, "Prime factorization as [(p, e), ...] with p increasing.");
  m.def("divisors", [](const py::int_ &x) {
    py::list out;
    for (const auto &d : divisors(to_nat(x))) out.append(to_py(d));
    return out;
  });

  m.def("pow_matrix", [](const Ints &s) { return to_py(pow_matrix(to_set(s))); },
        "Returns (primes, exponent rows).");
  m.def("is_column_monotone", [](const Ints &s) { return is_column_monotone(pow_matrix(to_set(s))).monotone; });
  m.def("find_monotone_order", [](const Ints &s) -> py::object {
    auto order = find_monotone_order(to_set(s));
    if (!order) return py::none();
    return py::cast(std::vector<std::size_t>(order->image().begin(), order->image().end()));
  }, "Zero-based image of a column-monotone ordering, or None.");
  m.def("is_gcd_closed", [](const Ints &s) { return is_gcd_closed(to_set(s)); });
  m.def("is_factor_closed", [](const Ints &s) { return is_factor_closed(to_set(s)); });
  m.def("reconstruct", [](const Ints &primes, std::vector<std::vector<unsigned long>> rows) {
    return to_py(reconstruct(to_exponents(primes, std::move(rows))));
  });
  m.def("pascal_set", [](std::size_t n, const Ints &primes) {
    std::vector<Nat> ps;
    for (const auto &p : primes) ps.push_back(to_nat(p));
    return to_py(reconstruct(pascal_exponents(n, std::move(ps))));
  });
  m.def("random_column_monotone", [](std::uint64_t seed, std::size_t n, unsigned long max_exp) {
    SeededRng rng(seed);
    RandomMonotoneOptions opts;
    opts.n = n;
    opts.max_exp = max_exp;
    return to_py(reconstruct(random_column_monotone(rng, opts)));
  }, py::arg("seed"), py::arg("n") = 5, py::arg("max_exp") = 6);

  m.def("gcd_matrix", [](const Ints &s) { return to_py(gcd_matrix(to_set(s))); });
  m.def("lcm_matrix", [](const Ints &s) { return to_py(lcm_matrix(to_set(s))); });
  m.def("determinant", [](const Ints &s) { return to_py(determinant(gcd_matrix(to_set(s)))); },
        "Determinant of the GCD matrix.");
  m.def("is_positive_definite", [](const Ints &s) { return is_positive_definite(gcd_matrix(to_set(s))); });

  m.def("is_tn", [](const Ints &s, const std::string &method) {
    const auto set = to_set(s);
    if (method == "triple") return check_tn_triple(set).is_tn();
    if (method == "pow") return check_tn_pow(set).is_tn();
    if (method == "minors") return check_tn_minors(set).is_tn();
    throw Error(Errc::InvalidArgument, "method must be triple, pow or minors");
  }, py::arg("s"), py::arg("method") = "triple");
  m.def("tridiagonal_inverse", [](const Ints &s) {
    const auto t = tridiagonal_inverse(to_set(s));
    py::list a, b;
    for (const auto &x : t.off_diagonal) a.append(to_py(x));
    for (const auto &x : t.diagonal) b.append(to_py(x));
    return py::make_tuple(a, b);
  }, "Returns (off_diagonal, diagonal) of the inverse GCD matrix.");
  m.def("quotient_closed_form", [](const Ints &s) { return to_py(quotient_closed_form(to_set(s))); });

  m.def("divide", [](const Ints &s, bool closed_form) {
    const auto set = to_set(s);
    return to_py(closed_form ? divide_via_closed_form(set) : divide_oracle(set));
  }, py::arg("s"), py::arg("closed_form") = false);
  m.def("divide_power", [](const Ints &s, unsigned long e) { return to_py(divide_power(to_set(s), e)); });
  m.def("search_nondivisor", [](std::size_t n, const py::int_ &bound, std::size_t budget) {
    const auto found = search_gcd_closed_nondivisor(n, to_nat(bound), budget);
    py::dict out;
    out["witness"] = found.witness ? py::object(to_py(*found.witness)) : py::none();
    out["tested"] = found.tested;
    out["single_gtd_confirmed"] = found.single_gtd_confirmed;
    return out;
  }, py::arg("n"), py::arg("bound"), py::arg("budget") = 100000);
}
