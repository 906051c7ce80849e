#include "bergcomm/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <Eigen/SVD>

#include "bergcomm/error.hpp"

namespace bergcomm {

namespace {

std::optional<MultiIndex> image_index(const MultiIndex& m, const Term& t) {
  std::vector<int> k(static_cast<std::size_t>(m.dim()));
  for (int j = 0; j < m.dim(); ++j) {
    const int v = m[j] + t.a[j] - t.b[j];
    if (v < 0) return std::nullopt;
    k[static_cast<std::size_t>(j)] = v;
  }
  return MultiIndex(std::move(k));
}

// c N_m N_k / N_{m+a}^2, the contribution of one matching term.
complex term_entry(const SpaceParams& p, const Term& t, const MultiIndex& m, const MultiIndex& k) {
  const double log_mag =
      log_norm_constant(p, m) + log_norm_constant(p, k) - 2.0 * log_norm_constant(p, m + t.a);
  return t.c * std::exp(log_mag);
}

void require_dims(const SpaceParams& p, const MonomialCombo& f) {
  if (f.dim() != p.n()) throw DimensionMismatch("symbol dimension does not match n");
}

// Sum over d > cap of Gamma(c+d)/(d! Gamma(c)) x^d, x in [0,1).
double kernel_tail(double c, double x, int cap) {
  if (x == 0.0) return 0.0;
  const double d0 = cap + 1.0;
  double term = std::exp(log_gamma(c + d0) - log_gamma(d0 + 1.0) - log_gamma(c) + d0 * std::log(x));
  double sum = 0.0;
  for (double d = d0;; d += 1.0) {
    sum += term;
    const double ratio = x * (c + d) / (d + 1.0);
    const double next = term * ratio;
    // Once the ratio is below 1 and decreasing toward x, a geometric series
    // with the current ratio dominates what remains.
    if (ratio < 1.0 && next <= 1e-17 * sum) return sum + next / (1.0 - ratio);
    if (!(next > 0.0)) return sum;
    term = next;
  }
}

}  // namespace

// ------------------------------------------------------------- PrefixOperator

PrefixOperator::PrefixOperator(SpaceParams p, std::shared_ptr<const BasisIndexer> indexer,
                               int raise, Matrix entries)
    : p_(p), indexer_(std::move(indexer)), raise_(raise), entries_(std::move(entries)) {
  if (!indexer_ || indexer_->dim() != p_.n()) throw DimensionMismatch("operator basis dimension");
  if (raise_ < 0) throw DomainError("operator raise must be >= 0");
  const auto N = static_cast<Eigen::Index>(indexer_->count());
  if (entries_.rows() != N || entries_.cols() != N) {
    throw DimensionMismatch("operator matrix must be " + std::to_string(N) + "x" + std::to_string(N));
  }
}

complex PrefixOperator::entry(const MultiIndex& k, const MultiIndex& m) const {
  const auto row = indexer_->position(k);
  const auto col = indexer_->position(m);
  if (!row || !col) {
    throw DomainError("entry (" + k.to_string() + ", " + m.to_string() + ") is outside the prefix");
  }
  return entries_(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(*col));
}

bool PrefixOperator::is_valid_column(const MultiIndex& m) const noexcept {
  return m.dim() == p_.n() && m.total() + raise_ <= degree();
}

std::vector<std::size_t> PrefixOperator::valid_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < indexer_->count(); ++i) {
    if (indexer_->at(i).total() + raise_ <= degree()) out.push_back(i);
  }
  return out;
}

PrefixOperator PrefixOperator::with_entry(const MultiIndex& k, const MultiIndex& m,
                                          complex value) const {
  const auto row = indexer_->position(k);
  const auto col = indexer_->position(m);
  if (!row || !col) throw DomainError("with_entry: index outside the prefix");
  Matrix copy = entries_;
  copy(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(*col)) = value;
  return PrefixOperator(p_, indexer_, raise_, std::move(copy));
}

PrefixOperator identity_operator(const SpaceParams& p, int D) {
  if (D < 0) throw DomainError("degree cap must be >= 0");
  auto idx = BasisIndexer::make(p.n(), D);
  const auto N = static_cast<Eigen::Index>(idx->count());
  return PrefixOperator(p, idx, 0, Matrix::Identity(N, N));
}

// --------------------------------------------------------------- entries

complex toeplitz_entry(const SpaceParams& p, const MonomialCombo& f, const MultiIndex& m,
                       const MultiIndex& k) {
  require_dims(p, f);
  if (m.dim() != p.n() || k.dim() != p.n()) throw DimensionMismatch("toeplitz_entry: index dimension");
  complex acc = 0.0;
  for (const auto& t : f.terms()) {
    auto image = image_index(m, t);
    if (image && *image == k) acc += term_entry(p, t, m, k);
  }
  return acc;
}

std::vector<std::pair<MultiIndex, complex>> apply(const SpaceParams& p, const MonomialCombo& f,
                                                  const MultiIndex& m) {
  require_dims(p, f);
  if (m.dim() != p.n()) throw DimensionMismatch("apply: index dimension");
  std::map<MultiIndex, complex, decltype(&graded_less)> merged(&graded_less);
  for (const auto& t : f.terms()) {
    auto k = image_index(m, t);
    if (!k) continue;
    merged[*k] += term_entry(p, t, m, *k);
  }
  std::vector<std::pair<MultiIndex, complex>> out;
  out.reserve(merged.size());
  for (auto& [k, v] : merged) {
    if (v != 0.0) out.emplace_back(k, v);
  }
  return out;
}

PrefixOperator assemble(const SpaceParams& p, const MonomialCombo& f, int D) {
  require_dims(p, f);
  if (D < f.raise()) {
    throw DomainError("degree cap " + std::to_string(D) + " is below the symbol's raise " +
                      std::to_string(f.raise()));
  }
  auto idx = BasisIndexer::make(p.n(), D);
  const auto N = static_cast<Eigen::Index>(idx->count());
  Matrix M = Matrix::Zero(N, N);
  for (std::size_t col = 0; col < idx->count(); ++col) {
    for (const auto& [k, v] : apply(p, f, idx->at(col))) {
      if (auto row = idx->position(k)) {
        M(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) = v;
      }
    }
  }
  return PrefixOperator(p, idx, f.raise(), std::move(M));
}

PrefixOperator assemble_diagonal(const SpaceParams& p, const SeparatelyRadialSymbol& g, int D) {
  const OmegaTable table = omega_table(p, g, D);
  auto idx = BasisIndexer::make(p.n(), D);
  const auto N = static_cast<Eigen::Index>(idx->count());
  Matrix M = Matrix::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) M(i, i) = table.values()[static_cast<std::size_t>(i)];
  return PrefixOperator(p, idx, 0, std::move(M));
}

PrefixOperator commutator(const PrefixOperator& A, const PrefixOperator& B) {
  if (!(A.params() == B.params())) throw DimensionMismatch("commutator: operators on different spaces");
  if (A.degree() != B.degree()) throw DimensionMismatch("commutator: degree caps differ");
  Matrix K = A.matrix() * B.matrix() - B.matrix() * A.matrix();
  const int raise = A.raise() + B.raise();
  for (std::size_t col = 0; col < A.size(); ++col) {
    if (A.indexer().at(col).total() + raise > A.degree()) {
      K.col(static_cast<Eigen::Index>(col)).setZero();
    }
  }
  return PrefixOperator(A.params(), A.indexer_ptr(), raise, std::move(K));
}

double commutator_entry_identity_check(const SpaceParams& p, const PrefixOperator& S,
                                       const MultiIndex& l, const MultiIndex& m,
                                       const MultiIndex& k) {
  if (!(S.params() == p)) throw DimensionMismatch("identity check: operator on a different space");
  const int D = S.degree();
  if (m.total() + S.raise() + l.total() > D || (k + l).total() > D) {
    throw DomainError("identity check: indices outside the valid block");
  }
  const PrefixOperator T = assemble(p, MonomialCombo::basis_element(p, l), D);
  const PrefixOperator K = commutator(S, T);
  const complex lhs = K.entry(k + l, m);
  const complex rhs =
      d_coeff(p, l, m) * S.entry(k + l, m + l) - d_coeff(p, l, k) * S.entry(k, m);
  return std::abs(lhs - rhs);
}

// ----------------------------------------------------------------- berezin

BerezinValue berezin(const SpaceParams& p, const MonomialCombo& f, std::span<const complex> z,
                     int cap) {
  require_dims(p, f);
  if (static_cast<int>(z.size()) != p.n()) throw DimensionMismatch("berezin: point dimension");
  if (cap < 0) throw DomainError("berezin: cap must be >= 0");
  double norm2 = 0.0;
  for (auto v : z) norm2 += std::norm(v);
  if (!(norm2 < 1.0)) throw DomainError("berezin: point must lie in the open unit ball");

  auto idx = BasisIndexer::make(p.n(), cap);
  // e_m(z) for every m in the prefix
  std::vector<complex> basis_at_z(idx->count());
  for (std::size_t i = 0; i < idx->count(); ++i) {
    const MultiIndex& m = idx->at(i);
    complex v = norm_constant(p, m);
    for (int j = 0; j < p.n(); ++j) v *= std::pow(z[static_cast<std::size_t>(j)], m[j]);
    basis_at_z[i] = v;
  }

  complex acc = 0.0;
  for (std::size_t col = 0; col < idx->count(); ++col) {
    const complex weight = std::conj(basis_at_z[col]);
    if (weight == 0.0) continue;
    for (const auto& [k, v] : apply(p, f, idx->at(col))) {
      if (auto row = idx->position(k)) acc += weight * v * basis_at_z[*row];
    }
  }
  const double c = p.n() + p.alpha() + 1.0;
  const double scale = std::pow(1.0 - norm2, c);

  double sup = 0.0;
  for (const auto& t : f.terms()) sup += std::abs(t.c);
  const double eps = std::sqrt(scale * kernel_tail(c, norm2, cap));
  return BerezinValue{scale * acc, sup * (2.0 * eps + eps * eps)};
}

double operator_norm(const PrefixOperator& A) {
  const auto cols = A.valid_columns();
  if (cols.empty()) return 0.0;
  Matrix block(A.matrix().rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) {
    block.col(static_cast<Eigen::Index>(i)) = A.matrix().col(static_cast<Eigen::Index>(cols[i]));
  }
  Eigen::JacobiSVD<Matrix> svd(block);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

}  // namespace bergcomm
