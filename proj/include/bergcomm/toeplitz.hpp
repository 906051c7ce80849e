#pragma once

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bergcomm/multiindex.hpp"
#include "bergcomm/specialfn.hpp"
#include "bergcomm/symbols.hpp"

namespace bergcomm {

using Matrix = Eigen::MatrixXcd;

/// Finite section of an operator on the span of {e_m : |m| <= D}.
/// entries(row, col) = <S e_m, e_k> with col = position(m), row = position(k).
/// A column m is valid when |m| + raise <= D: its image lies entirely
/// inside the prefix, so the column carries no truncation error.
class PrefixOperator {
 public:
  PrefixOperator(SpaceParams p, std::shared_ptr<const BasisIndexer> indexer, int raise,
                 Matrix entries);

  const SpaceParams& params() const noexcept { return p_; }
  const BasisIndexer& indexer() const noexcept { return *indexer_; }
  std::shared_ptr<const BasisIndexer> indexer_ptr() const noexcept { return indexer_; }
  int degree() const noexcept { return indexer_->degree(); }
  int raise() const noexcept { return raise_; }
  std::size_t size() const noexcept { return indexer_->count(); }
  const Matrix& matrix() const noexcept { return entries_; }

  /// <S e_m, e_k>; throws DomainError outside the prefix.
  complex entry(const MultiIndex& k, const MultiIndex& m) const;
  bool is_valid_column(const MultiIndex& m) const noexcept;
  /// Positions of the valid columns, in basis order.
  std::vector<std::size_t> valid_columns() const;

  /// Copy with one entry replaced.
  PrefixOperator with_entry(const MultiIndex& k, const MultiIndex& m, complex value) const;

 private:
  SpaceParams p_;
  std::shared_ptr<const BasisIndexer> indexer_;
  int raise_;
  Matrix entries_;
};

PrefixOperator identity_operator(const SpaceParams& p, int D);

/// <T_f e_m, e_k>: sum over terms with k = m + a - b of
/// c N_m N_k int |z^{m+a}|^2 dnu_alpha. Closed form.
complex toeplitz_entry(const SpaceParams& p, const MonomialCombo& f, const MultiIndex& m,
                       const MultiIndex& k);

/// T_f e_m as a basis combination, merged and sorted by graded order.
std::vector<std::pair<MultiIndex, complex>> apply(const SpaceParams& p, const MonomialCombo& f,
                                                  const MultiIndex& m);

/// T_f on the degree-D prefix. Requires D >= raise(f).
PrefixOperator assemble(const SpaceParams& p, const MonomialCombo& f, int D);

/// The diagonal operator T_g, entries from omega_table.
PrefixOperator assemble_diagonal(const SpaceParams& p, const SeparatelyRadialSymbol& g, int D);

/// AB - BA with raise(A) + raise(B). Columns outside the joint valid block
/// are set to zero. Requires matching params and D.
PrefixOperator commutator(const PrefixOperator& A, const PrefixOperator& B);

/// |<[S,T_{e_l}] e_m, e_{k+l}> - (d(l,m) <S e_{m+l}, e_{k+l}> - d(l,k) <S e_m, e_k>)|.
/// Requires |m| + raise(S) + |l| <= D and |k + l| <= D.
double commutator_entry_identity_check(const SpaceParams& p, const PrefixOperator& S,
                                       const MultiIndex& l, const MultiIndex& m,
                                       const MultiIndex& k);

struct BerezinValue {
  complex value;
  /// Bound on |<f k_z, k_z> - value| from the kernel mass beyond the cap:
  /// sup|f| (2 eps + eps^2), eps^2 = (1-|z|^2)^c sum_{d > cap} Gamma(c+d)/(d! Gamma(c)) |z|^{2d},
  /// c = n + alpha + 1, sup|f| bounded by the sum of |coefficients|.
  double tail_bound = 0.0;
};

/// <f k_z, k_z> with the normalized kernel expanded in the basis up to total
/// degree `cap`. Requires |z| < 1.
BerezinValue berezin(const SpaceParams& p, const MonomialCombo& f, std::span<const complex> z,
                     int cap = 60);

/// Largest singular value of the valid columns (all rows).
double operator_norm(const PrefixOperator& A);

}  // namespace bergcomm
