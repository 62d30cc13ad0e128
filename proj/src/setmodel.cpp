#include "gcdtn/setmodel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gcdtn {

OrderedSet::OrderedSet(std::vector<Nat> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(Errc::InvalidSet, "an ordered set needs at least one element");
  std::vector<Nat> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front().is_zero())
    throw Error(Errc::InvalidSet, "elements must be positive integers");
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw Error(Errc::InvalidSet, "element " + dup->str() + " appears more than once");
}

OrderedSet::OrderedSet(std::initializer_list<unsigned long> elements)
  : OrderedSet(std::vector<Nat>(elements.begin(), elements.end())) {}

auto OrderedSet::contains(const Nat &x) const -> bool { return index_of(x).has_value(); }

auto OrderedSet::index_of(const Nat &x) const -> std::optional<std::size_t> {
  auto it = std::find(elements_.begin(), elements_.end(), x);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v])
      throw Error(Errc::InvalidArgument, "image list is not a rearrangement of 0..n-1");
    seen[v] = true;
  }
}

auto Permutation::identity(std::size_t n) -> Permutation {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

auto Permutation::apply(const OrderedSet &s) const -> OrderedSet {
  if (s.size() != image_.size())
    throw Error(Errc::DimensionMismatch, "permutation and set differ in size");
  std::vector<Nat> out;
  out.reserve(s.size());
  for (std::size_t v : image_) out.push_back(s[v]);
  return OrderedSet(std::move(out));
}

auto direction_name(ColumnDirection d) -> const char * {
  switch (d) {
  case ColumnDirection::Constant: return "Constant";
  case ColumnDirection::Up: return "Up";
  case ColumnDirection::Down: return "Down";
  case ColumnDirection::Mixed: return "Mixed";
  }
  return "?";
}

auto pow_matrix(const OrderedSet &s) -> ExponentMatrix {
  std::vector<Factorization> fs;
  fs.reserve(s.size());
  std::set<Nat> primes;
  for (const Nat &x : s.elements()) {
    fs.push_back(factorize(x));
    for (const auto &pp : fs.back().factors) primes.insert(pp.prime);
  }
  ExponentMatrix m;
  m.primes.assign(primes.begin(), primes.end());
  m.exponents.assign(s.size(), std::vector<unsigned long>(m.primes.size(), 0));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (const auto &[p, e] : fs[i].factors) {
      auto col = std::lower_bound(m.primes.begin(), m.primes.end(), p) - m.primes.begin();
      m.exponents[i][static_cast<std::size_t>(col)] = e;
    }
  }
  return m;
}

auto is_column_monotone(const ExponentMatrix &m) -> MonotoneReport {
  MonotoneReport report{true, {}};
  report.directions.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    bool up = false, down = false;
    for (std::size_t r = 1; r < m.rows(); ++r) {
      up |= m.exponents[r][c] > m.exponents[r - 1][c];
      down |= m.exponents[r][c] < m.exponents[r - 1][c];
    }
    ColumnDirection d = up && down ? ColumnDirection::Mixed
                        : up       ? ColumnDirection::Up
                        : down     ? ColumnDirection::Down
                                   : ColumnDirection::Constant;
    report.monotone &= d != ColumnDirection::Mixed;
    report.directions.push_back(d);
  }
  return report;
}

namespace {

// Union-find carrying the parity of each node relative to its root.
struct ParityForest {
  std::vector<std::size_t> parent;
  std::vector<int> parity;

  explicit ParityForest(std::size_t n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  auto find(std::size_t v) -> std::pair<std::size_t, int> {
    int acc = 0;
    std::size_t r = v;
    while (parent[r] != r) {
      acc ^= parity[r];
      r = parent[r];
    }
    // path compression
    int along = acc;
    while (parent[v] != r) {
      std::size_t next = parent[v];
      int pv = parity[v];
      parent[v] = r;
      parity[v] = along;
      along ^= pv;
      v = next;
    }
    return {r, acc};
  }
  // Require parity(a) ^ parity(b) == rel; false on contradiction.
  auto unite(std::size_t a, std::size_t b, int rel) -> bool {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[rb] = ra;
    parity[rb] = pa ^ pb ^ rel;
    return true;
  }
};

} // namespace

// Two rows are comparable under a choice of column directions exactly when
// every column in which they differ moves the same way after flipping. That
// is a parity constraint between column directions, so the orderable sets
// are those whose constraint system is consistent; the resulting chain order
// and its reverse are then the only monotone orders.
auto find_monotone_order(const OrderedSet &s) -> std::optional<Permutation> {
  const std::size_t n = s.size();
  if (n <= 2) return Permutation::identity(n);
  const ExponentMatrix m = pow_matrix(s);
  const std::size_t k = m.cols();

  ParityForest forest(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::optional<std::size_t> anchor;
      int anchor_sign = 0;
      for (std::size_t c = 0; c < k; ++c) {
        const auto a = m.exponents[i][c], b = m.exponents[j][c];
        if (a == b) continue;
        int sign = b > a ? 0 : 1;
        if (!anchor) {
          anchor = c;
          anchor_sign = sign;
        } else if (!forest.unite(*anchor, c, anchor_sign ^ sign)) {
          return std::nullopt;
        }
      }
    }
  }

  std::vector<int> flip(k);
  for (std::size_t c = 0; c < k; ++c) flip[c] = forest.find(c).second;
  auto key_less = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < k; ++c) {
      long va = static_cast<long>(m.exponents[a][c]), vb = static_cast<long>(m.exponents[b][c]);
      if (flip[c]) va = -va, vb = -vb;
      if (va != vb) return va < vb;
    }
    return false;
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), key_less);
  std::vector<std::size_t> reversed(order.rbegin(), order.rend());
  return Permutation(std::min(order, reversed));
}

auto is_gcd_closed(const OrderedSet &s) -> bool {
  const std::set<Nat> members(s.elements().begin(), s.elements().end());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!members.contains(gcd(s[i], s[j]))) return false;
  return true;
}

auto is_factor_closed(const OrderedSet &s) -> bool {
  const std::set<Nat> members(s.elements().begin(), s.elements().end());
  for (const Nat &x : s.elements())
    for (const Nat &d : divisors(x))
      if (!members.contains(d)) return false;
  return true;
}

auto greatest_type_divisors(const OrderedSet &s, const Nat &y) -> std::vector<Nat> {
  if (!s.contains(y)) throw Error(Errc::NotAMember, y.str() + " is not a member of the set");
  std::vector<Nat> out;
  for (const Nat &x : s.elements()) {
    if (!(x < y) || !x.divides(y)) continue;
    bool maximal = std::none_of(s.elements().begin(), s.elements().end(), [&](const Nat &z) {
      return z != x && z != y && x.divides(z) && z.divides(y);
    });
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

auto max_greatest_type_count(const OrderedSet &s) -> std::size_t {
  std::size_t best = 0;
  for (const Nat &y : s.elements()) best = std::max(best, greatest_type_divisors(s, y).size());
  return best;
}

auto classify_coprime_divisor_chains(const OrderedSet &s) -> std::optional<ChainPartition> {
  const std::size_t n = s.size();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!gcd(s[i], s[j]).is_one()) root[find(j)] = find(i);

  ChainPartition blocks;
  std::map<std::size_t, std::size_t> block_of_root;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = block_of_root.try_emplace(find(i), blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(s[i]);
  }
  for (auto &block : blocks) {
    std::sort(block.begin(), block.end());
    for (std::size_t t = 1; t < block.size(); ++t)
      if (!block[t - 1].divides(block[t])) return std::nullopt;
  }
  return blocks;
}

auto power_set(const OrderedSet &s, unsigned long e) -> OrderedSet {
  if (e == 0) throw Error(Errc::InvalidArgument, "power must be a positive integer");
  std::vector<Nat> out;
  out.reserve(s.size());
  for (const Nat &x : s.elements()) out.push_back(pow(x, e));
  return OrderedSet(std::move(out));
}

auto reconstruct(const ExponentMatrix &m) -> OrderedSet {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_prime(m.primes[c])) throw Error(Errc::NotPrime, m.primes[c].str() + " is not prime");
    if (c > 0 && !(m.primes[c - 1] < m.primes[c]))
      throw Error(Errc::PrimesNotIncreasing, "primes must be strictly increasing");
  }
  for (const auto &row : m.exponents)
    if (row.size() != m.cols())
      throw Error(Errc::DimensionMismatch, "every exponent row needs one entry per prime");
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return m.exponents[a] < m.exponents[b]; });
  for (std::size_t t = 1; t < idx.size(); ++t)
    if (m.exponents[idx[t - 1]] == m.exponents[idx[t]])
      throw Error(Errc::DuplicateRows, "rows " + std::to_string(idx[t - 1] + 1) + " and " +
                                           std::to_string(idx[t] + 1) + " are identical");
  std::vector<Nat> out;
  out.reserve(m.rows());
  for (const auto &row : m.exponents) {
    Nat x(1);
    for (std::size_t c = 0; c < m.cols(); ++c) x *= pow(m.primes[c], row[c]);
    out.push_back(std::move(x));
  }
  return OrderedSet(std::move(out));
}

} // namespace gcdtn
