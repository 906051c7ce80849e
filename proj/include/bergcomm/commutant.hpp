#pragma once

#include <optional>
#include <vector>

#include "bergcomm/multiindex.hpp"
#include "bergcomm/symbols.hpp"
#include "bergcomm/toeplitz.hpp"

namespace bergcomm {

/// Location of one operator entry <S e_m, e_k>.
struct EntryLocation {
  MultiIndex m;  // input (column)
  MultiIndex k;  // output (row)
};

/// Whether a matrix-given S looks like an analytic Toeplitz operator on the
/// valid block: <S e_m, e_k> = 0 unless k >= m componentwise, and
/// <S e_m, e_{m+l}> / d(l,m) does not depend on m.
struct AnalyticTestReport {
  double tol = 0.0;
  /// max |<S e_m, e_k>| over valid m and k not dominating m
  double lower_triangle_max = 0.0;
  std::optional<EntryLocation> lower_witness;
  /// max over l and valid m of |<S e_m, e_{m+l}>/d(l,m) - <S e_0, e_l>|
  double diagonal_spread = 0.0;
  std::optional<EntryLocation> spread_witness;
  bool pass = false;
};

AnalyticTestReport analytic_test(const PrefixOperator& S, double tol);

/// sum_l a_l e_l with a_l = <S e_0, e_l>, written in monomials. Throws
/// DomainError when analytic_test(S, tol) fails.
MonomialCombo extract_symbol(const PrefixOperator& S, double tol = 1e-10);

/// max |assemble(f) - S| over the valid columns of S.
double roundtrip_residual(const PrefixOperator& S, const MonomialCombo& f);

struct Lemma4Report {
  /// max |(d(l,m)/d(l,k)) <S e_{m+l}, e_{k+l}> - <S e_m, e_k>|
  double residual = 0.0;
  std::optional<EntryLocation> witness;
  std::size_t pairs = 0;
};

/// Shift relation over every (m, k) with m + l a valid column and
/// |k + l| <= D. Throws DomainError when no such pair exists.
Lemma4Report lemma4_check(const PrefixOperator& S, const MultiIndex& l);

/// S e_m = d(m, delta_n) e_{m + delta_n} if m_n = 0, else 0. Compact,
/// commutes with T_{z_1}, ..., T_{z_{n-1}} but not with T_{z_n}. Requires n >= 2.
PrefixOperator prop4_operator(const SpaceParams& p, int D);

struct Prop2Verdict {
  ShiftIndex l;
  /// omega(g, m + l) = omega(g, m) for all m is expected exactly when
  /// sum l = 0 and s_j l_j = 0 for every j.
  bool expect_equal = false;
};

Prop2Verdict prop2_classify(const SeparatelyRadialSymbol& g, const ShiftIndex& l);

struct Theorem2Report {
  /// max |(omega(m+l) - omega(m)) <T_f e_{m+l}, e_m>| over the prefix
  double residual = 0.0;
  /// Where the max is attained: column m+l, row m.
  std::optional<EntryLocation> witness;
  std::optional<ShiftIndex> witness_shift;
  complex witness_entry = 0.0;
  complex witness_omega_gap = 0.0;
};

/// Pairs are those produced by apply, so only shifts that touch the
/// prefix are visited. Requires D >= raise(f).
Theorem2Report theorem2_residual(const SpaceParams& p, const MonomialCombo& f,
                                 const SeparatelyRadialSymbol& g, int D);

struct Theorem2Equivalence {
  Theorem2Report report;
  bool residual_pass = false;
  /// f circular, and a_j = b_j on every term for each j with s_j != 0
  bool predicate_pass = false;
  bool agree() const noexcept { return residual_pass == predicate_pass; }
};

/// Throws DomainError when g is constant.
Theorem2Equivalence theorem2_equivalence(const SpaceParams& p, const MonomialCombo& f,
                                         const SeparatelyRadialSymbol& g, int D, double tol);

}  // namespace bergcomm
