#include "gcdtn/exactmatrix.hpp"

#include <algorithm>
#include <numeric>

namespace gcdtn {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
  : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(const std::vector<std::vector<Rat>> &grid)
  : rows_(grid.size()), cols_(grid.empty() ? 0 : grid.front().size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto &row : grid) {
    if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

auto ExactMatrix::identity(std::size_t n) -> ExactMatrix {
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

auto ExactMatrix::transpose() const -> ExactMatrix {
  ExactMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

auto ExactMatrix::is_symmetric() const -> bool {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

auto ExactMatrix::is_integral() const -> bool {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rat &q) { return q.is_integer(); });
}

auto ExactMatrix::submatrix(const std::vector<std::size_t> &rows,
                            const std::vector<std::size_t> &cols) const -> ExactMatrix {
  ExactMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
  return out;
}

auto operator*(const ExactMatrix &a, const ExactMatrix &b) -> ExactMatrix {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product dimension mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat &aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

auto gcd_matrix(const OrderedSet &s) -> ExactMatrix {
  const std::size_t n = s.size();
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = Rat(s[i]);
    for (std::size_t j = i + 1; j < n; ++j) out(i, j) = out(j, i) = Rat(gcd(s[i], s[j]));
  }
  return out;
}

auto lcm_matrix(const OrderedSet &s) -> ExactMatrix {
  const std::size_t n = s.size();
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = Rat(s[i]);
    for (std::size_t j = i + 1; j < n; ++j) out(i, j) = out(j, i) = Rat(lcm(s[i], s[j]));
  }
  return out;
}

auto determinant(const ExactMatrix &m) -> Rat {
  if (!m.is_square()) throw Error(Errc::NotSquare, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);

  // Scale each row to integers; det(m) = det(scaled) / prod(row scales).
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).mpq().get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = m(r, c).num() * (row_lcm / m(r, c).den());
    scale *= row_lcm;
  }

  // Bareiss: every division below is exact.
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return Rat(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  mpz_class det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rat(det, scale);
}

namespace {

// Advance a sorted k-subset of {0..n-1} to its lexicographic successor.
auto next_combination(std::vector<std::size_t> &idx, std::size_t n) -> bool {
  const std::size_t k = idx.size();
  for (std::size_t t = k; t-- > 0;) {
    if (idx[t] < n - k + t) {
      ++idx[t];
      for (std::size_t u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace

auto all_minors_nonnegative(const ExactMatrix &m, std::size_t size_cap) -> MinorCheck {
  if (!m.is_square()) throw Error(Errc::NotSquare, "minor enumeration needs a square matrix");
  const std::size_t n = m.rows();
  if (n > size_cap)
    throw Error(Errc::TooLargeForExhaustiveMinors,
                "n = " + std::to_string(n) + " exceeds the minor cap " + std::to_string(size_cap));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    do {
      std::vector<std::size_t> cols(k);
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      do {
        Rat d = determinant(m.submatrix(rows, cols));
        if (d.sign() < 0) return {false, MinorWitness{rows, cols, d}};
      } while (next_combination(cols, n));
    } while (next_combination(rows, n));
  }
  return {true, std::nullopt};
}

auto solve_right(const ExactMatrix &a, const ExactMatrix &b) -> ExactMatrix {
  if (!a.is_square()) throw Error(Errc::NotSquare, "solve_right needs a square coefficient matrix");
  const std::size_t n = a.rows();
  if (b.cols() != n)
    throw Error(Errc::DimensionMismatch, "right-hand side must have as many columns as a");
  const std::size_t r = b.rows();

  // X a = b  <=>  a^T X^T = b^T; Gauss-Jordan on [a^T | b^T].
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n + r));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a(j, i);
    for (std::size_t j = 0; j < r; ++j) w[i][n + j] = b(j, i);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && w[p][col].is_zero()) ++p;
    if (p == n) throw Error(Errc::Singular, "coefficient matrix is singular");
    std::swap(w[col], w[p]);
    const Rat inv = Rat(1) / w[col][col];
    for (auto &v : w[col]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w[i][col].is_zero()) continue;
      const Rat f = w[i][col];
      for (std::size_t j = col; j < n + r; ++j) w[i][j] -= f * w[col][j];
    }
  }
  ExactMatrix x(r, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) x(j, i) = w[i][n + j];
  return x;
}

auto is_positive_definite(const ExactMatrix &m) -> bool {
  if (!m.is_square()) throw Error(Errc::NotSquare, "positive definiteness needs a square matrix");
  if (!m.is_symmetric()) throw Error(Errc::NotSymmetric, "matrix is not symmetric");
  std::vector<std::size_t> lead;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    lead.push_back(k);
    if (determinant(m.submatrix(lead, lead)).sign() <= 0) return false;
  }
  return true;
}

} // namespace gcdtn
