#include "bergcomm/multiindex.hpp"

#include <algorithm>
#include <numeric>

#include "bergcomm/error.hpp"

namespace bergcomm {

namespace {

void require_same_dim(int a, int b, const char* op) {
  if (a != b) {
    throw DimensionMismatch(std::string(op) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

std::string join(std::span<const int> c) {
  std::string s = "(";
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(c[j]);
  }
  return s + ")";
}

// Compositions of `d` into the slots [j, n) of `cur`, leading slot largest first.
void compositions(int d, std::size_t j, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (j + 1 == cur.size()) {
    cur[j] = d;
    out.emplace_back(cur);
    return;
  }
  for (int v = d; v >= 0; --v) {
    cur[j] = v;
    compositions(d - v, j + 1, cur, out);
  }
  cur[j] = 0;
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> components) : c_(std::move(components)) {
  if (c_.empty()) throw DomainError("multi-index must have length >= 1");
  for (int v : c_) {
    if (v < 0) throw DomainError("multi-index component is negative: " + join(c_));
    total_ += v;
  }
}

MultiIndex MultiIndex::zero(int n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0));
}

MultiIndex MultiIndex::unit(int n, int j) {
  if (j < 0 || j >= n) throw DomainError("unit index out of range");
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c[static_cast<std::size_t>(j)] = 1;
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  require_same_dim(dim(), other.dim(), "multi-index sum");
  std::vector<int> c(c_);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] += other.c_[j];
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::scaled(int s) const {
  if (s < 0) throw DomainError("negative multi-index scale");
  std::vector<int> c(c_);
  for (int& v : c) v *= s;
  return MultiIndex(std::move(c));
}

std::string MultiIndex::to_string() const { return join(c_); }

ShiftIndex::ShiftIndex(std::vector<int> components) : c_(std::move(components)) {
  if (c_.empty()) throw DomainError("shift index must have length >= 1");
}

ShiftIndex ShiftIndex::from(const MultiIndex& m) {
  auto c = m.components();
  return ShiftIndex(std::vector<int>(c.begin(), c.end()));
}

ShiftIndex ShiftIndex::difference(const MultiIndex& a, const MultiIndex& b) {
  require_same_dim(a.dim(), b.dim(), "shift difference");
  std::vector<int> c(static_cast<std::size_t>(a.dim()));
  for (int j = 0; j < a.dim(); ++j) c[static_cast<std::size_t>(j)] = a[j] - b[j];
  return ShiftIndex(std::move(c));
}

int ShiftIndex::sum() const noexcept { return std::accumulate(c_.begin(), c_.end(), 0); }

bool ShiftIndex::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

MultiIndex ShiftIndex::positive_part() const {
  std::vector<int> c(c_.size());
  std::transform(c_.begin(), c_.end(), c.begin(), [](int v) { return std::max(v, 0); });
  return MultiIndex(std::move(c));
}

MultiIndex ShiftIndex::negative_part() const {
  std::vector<int> c(c_.size());
  std::transform(c_.begin(), c_.end(), c.begin(), [](int v) { return std::max(-v, 0); });
  return MultiIndex(std::move(c));
}

MultiIndex ShiftIndex::abs_part() const {
  std::vector<int> c(c_.size());
  std::transform(c_.begin(), c_.end(), c.begin(), [](int v) { return v < 0 ? -v : v; });
  return MultiIndex(std::move(c));
}

ShiftIndex ShiftIndex::operator-() const {
  std::vector<int> c(c_);
  for (int& v : c) v = -v;
  return ShiftIndex(std::move(c));
}

std::string ShiftIndex::to_string() const { return join(c_); }

bool dominates(const MultiIndex& m, const MultiIndex& k) {
  require_same_dim(m.dim(), k.dim(), "dominates");
  for (int j = 0; j < m.dim(); ++j) {
    if (m[j] < k[j]) return false;
  }
  return true;
}

std::optional<MultiIndex> shift(const MultiIndex& m, const ShiftIndex& l) {
  require_same_dim(m.dim(), l.dim(), "shift");
  std::vector<int> c(static_cast<std::size_t>(m.dim()));
  for (int j = 0; j < m.dim(); ++j) {
    const int v = m[j] + l[j];
    if (v < 0) return std::nullopt;
    c[static_cast<std::size_t>(j)] = v;
  }
  return MultiIndex(std::move(c));
}

bool graded_less(const MultiIndex& a, const MultiIndex& b) {
  require_same_dim(a.dim(), b.dim(), "graded order");
  if (a.total() != b.total()) return a.total() < b.total();
  for (int j = 0; j < a.dim(); ++j) {
    if (a[j] != b[j]) return a[j] > b[j];
  }
  return false;
}

std::vector<MultiIndex> enumerate_degree(int n, int d) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (d < 0) throw DomainError("degree must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  compositions(d, 0, cur, out);
  return out;
}

std::vector<MultiIndex> enumerate(int n, int D) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (D < 0) throw DomainError("degree cap must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(basis_count(n, D));
  for (int d = 0; d <= D; ++d) {
    auto block = enumerate_degree(n, d);
    std::move(block.begin(), block.end(), std::back_inserter(out));
  }
  return out;
}

std::size_t basis_count(int n, int D) {
  // C(n+D, n) = prod_{i=1..n} (D+i)/i, exact at every step.
  std::size_t c = 1;
  for (int i = 1; i <= n; ++i) c = c * static_cast<std::size_t>(D + i) / static_cast<std::size_t>(i);
  return c;
}

BasisIndexer::BasisIndexer(int n, int D) : n_(n), D_(D), order_(enumerate(n, D)) {
  lookup_.reserve(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) lookup_.emplace(order_[i], i);
}

std::shared_ptr<const BasisIndexer> BasisIndexer::make(int n, int D) {
  return std::make_shared<const BasisIndexer>(n, D);
}

std::optional<std::size_t> BasisIndexer::position(const MultiIndex& m) const {
  require_same_dim(n_, m.dim(), "basis lookup");
  if (m.total() > D_) return std::nullopt;
  auto it = lookup_.find(m);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t BasisIndexer::Hash::operator()(const MultiIndex& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : m.components()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace bergcomm
