#include "bergcomm/commutant.hpp"

#include <cmath>

#include "bergcomm/error.hpp"

namespace bergcomm {

namespace {

Eigen::Index at(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::optional<MultiIndex> difference_if_dominated(const MultiIndex& k, const MultiIndex& m) {
  std::vector<int> l(static_cast<std::size_t>(k.dim()));
  for (int j = 0; j < k.dim(); ++j) {
    const int v = k[j] - m[j];
    if (v < 0) return std::nullopt;
    l[static_cast<std::size_t>(j)] = v;
  }
  return MultiIndex(std::move(l));
}

}  // namespace

AnalyticTestReport analytic_test(const PrefixOperator& S, double tol) {
  const auto cols = S.valid_columns();
  if (cols.empty()) throw DomainError("analytic_test: the valid block is empty");
  const auto& idx = S.indexer();
  const SpaceParams& p = S.params();
  const auto& M = S.matrix();
  const std::size_t zero = *idx.position(MultiIndex::zero(p.n()));

  AnalyticTestReport rep;
  rep.tol = tol;
  for (std::size_t col : cols) {
    const MultiIndex& m = idx.at(col);
    for (std::size_t row = 0; row < idx.count(); ++row) {
      const MultiIndex& k = idx.at(row);
      const complex v = M(at(row), at(col));
      auto l = difference_if_dominated(k, m);
      if (!l) {
        if (std::abs(v) > rep.lower_triangle_max) {
          rep.lower_triangle_max = std::abs(v);
          rep.lower_witness = EntryLocation{m, k};
        }
        continue;
      }
      const complex a_l = M(at(*idx.position(*l)), at(zero));
      const double dev = std::abs(v / d_coeff(p, *l, m) - a_l);
      if (dev > rep.diagonal_spread) {
        rep.diagonal_spread = dev;
        rep.spread_witness = EntryLocation{m, k};
      }
    }
  }
  rep.pass = rep.lower_triangle_max <= tol && rep.diagonal_spread <= tol;
  return rep;
}

MonomialCombo extract_symbol(const PrefixOperator& S, double tol) {
  const auto rep = analytic_test(S, tol);
  if (!rep.pass) {
    throw DomainError("extract_symbol: operator fails the analytic Toeplitz test (lower " +
                      std::to_string(rep.lower_triangle_max) + ", spread " +
                      std::to_string(rep.diagonal_spread) + ")");
  }
  const SpaceParams& p = S.params();
  const auto& idx = S.indexer();
  const std::size_t zero = *idx.position(MultiIndex::zero(p.n()));
  std::vector<Term> terms;
  for (std::size_t row = 0; row < idx.count(); ++row) {
    const complex a_l = S.matrix()(at(row), at(zero));
    if (a_l == 0.0) continue;
    const MultiIndex& l = idx.at(row);
    terms.push_back(Term{l, MultiIndex::zero(p.n()), a_l * norm_constant(p, l)});
  }
  return MonomialCombo(p.n(), std::move(terms));
}

double roundtrip_residual(const PrefixOperator& S, const MonomialCombo& f) {
  const PrefixOperator R = assemble(S.params(), f, S.degree());
  double worst = 0.0;
  for (std::size_t col : S.valid_columns()) {
    worst = std::max(worst, (R.matrix().col(at(col)) - S.matrix().col(at(col))).cwiseAbs().maxCoeff());
  }
  return worst;
}

Lemma4Report lemma4_check(const PrefixOperator& S, const MultiIndex& l) {
  const SpaceParams& p = S.params();
  if (l.dim() != p.n()) throw DimensionMismatch("lemma4_check: shift dimension");
  const auto& idx = S.indexer();
  const int D = S.degree();
  Lemma4Report rep;
  for (std::size_t col = 0; col < idx.count(); ++col) {
    const MultiIndex& m = idx.at(col);
    const MultiIndex ml = m + l;
    if (!S.is_valid_column(ml)) continue;
    for (std::size_t row = 0; row < idx.count(); ++row) {
      const MultiIndex& k = idx.at(row);
      const MultiIndex kl = k + l;
      if (kl.total() > D) continue;
      const double ratio = std::exp(log_d_coeff(p, l, m) - log_d_coeff(p, l, k));
      const double r = std::abs(ratio * S.entry(kl, ml) - S.matrix()(at(row), at(col)));
      ++rep.pairs;
      if (r > rep.residual) {
        rep.residual = r;
        rep.witness = EntryLocation{m, k};
      }
    }
  }
  if (rep.pairs == 0) throw DomainError("lemma4_check: no (m, k) pair fits in the prefix for this shift");
  return rep;
}

PrefixOperator prop4_operator(const SpaceParams& p, int D) {
  if (p.n() < 2) throw DomainError("prop4_operator: requires n >= 2");
  if (D < 1) throw DomainError("prop4_operator: requires D >= 1");
  auto idx = BasisIndexer::make(p.n(), D);
  const auto N = static_cast<Eigen::Index>(idx->count());
  Matrix M = Matrix::Zero(N, N);
  const MultiIndex axis = MultiIndex::unit(p.n(), p.n() - 1);
  for (std::size_t col = 0; col < idx->count(); ++col) {
    const MultiIndex& m = idx->at(col);
    if (m[p.n() - 1] != 0 || m.total() > D - 1) continue;
    M(at(*idx->position(m + axis)), at(col)) = d_coeff(p, m, axis);
  }
  return PrefixOperator(p, idx, 1, std::move(M));
}

Prop2Verdict prop2_classify(const SeparatelyRadialSymbol& g, const ShiftIndex& l) {
  if (l.dim() != g.dim()) throw DimensionMismatch("prop2_classify: shift dimension");
  bool equal = l.sum() == 0;
  for (int j = 0; j < g.dim() && equal; ++j) {
    if (g.s()[static_cast<std::size_t>(j)] != 0.0 && l[j] != 0) equal = false;
  }
  return Prop2Verdict{l, equal};
}

Theorem2Report theorem2_residual(const SpaceParams& p, const MonomialCombo& f,
                                 const SeparatelyRadialSymbol& g, int D) {
  if (D < f.raise()) throw DomainError("theorem2_residual: degree cap below the symbol's raise");
  const OmegaTable omega = omega_table(p, g, D);
  const auto& idx = omega.indexer();
  Theorem2Report rep;
  for (std::size_t col = 0; col < idx.count(); ++col) {
    const MultiIndex& ml = idx.at(col);
    for (const auto& [m, entry] : apply(p, f, ml)) {
      if (m.total() > D) continue;
      const complex gap = omega.values()[col] - omega.at(m);
      const double r = std::abs(gap * entry);
      if (r > rep.residual) {
        rep.residual = r;
        rep.witness = EntryLocation{ml, m};
        rep.witness_shift = ShiftIndex::difference(ml, m);
        rep.witness_entry = entry;
        rep.witness_omega_gap = gap;
      }
    }
  }
  return rep;
}

Theorem2Equivalence theorem2_equivalence(const SpaceParams& p, const MonomialCombo& f,
                                         const SeparatelyRadialSymbol& g, int D, double tol) {
  if (g.is_constant()) throw DomainError("theorem2_equivalence: g must be non-constant");
  Theorem2Equivalence out;
  out.report = theorem2_residual(p, f, g, D);
  out.residual_pass = out.report.residual <= tol;
  const InvarianceFlags flags = invariance_flags(f);
  out.predicate_pass = flags.circular;
  for (int j = 0; j < g.dim(); ++j) {
    if (g.s()[static_cast<std::size_t>(j)] != 0.0 && !flags.axis_modulus[static_cast<std::size_t>(j)]) {
      out.predicate_pass = false;
    }
  }
  return out;
}

}  // namespace bergcomm
