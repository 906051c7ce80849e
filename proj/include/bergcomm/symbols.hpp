#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bergcomm/multiindex.hpp"
#include "bergcomm/quadrature.hpp"
#include "bergcomm/specialfn.hpp"

namespace bergcomm {

/// One term c * z^a * conj(z)^b.
struct Term {
  MultiIndex a;
  MultiIndex b;
  complex c;

  bool operator==(const Term&) const = default;
};

/// f(z) = sum c z^a conj(z)^b in canonical form: at most one term per
/// (a, b), no exactly-zero coefficients, terms sorted by (a, b).
class MonomialCombo {
 public:
  explicit MonomialCombo(int n);
  /// Merges duplicate (a, b) pairs and drops zero coefficients.
  MonomialCombo(int n, std::vector<Term> terms);

  static MonomialCombo constant(int n, complex c);
  static MonomialCombo monomial(const MultiIndex& a, const MultiIndex& b, complex c = 1.0);
  /// z_j (zero-based j)
  static MonomialCombo coordinate(int n, int j);
  /// e_l = N_l z^l
  static MonomialCombo basis_element(const SpaceParams& p, const MultiIndex& l);

  int dim() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// max |a| over terms: how far T_f can raise the total degree.
  int raise() const noexcept;
  /// max |b| over terms.
  int lower() const noexcept;
  /// max |a| + |b| over terms.
  int degree() const noexcept;
  /// True when every term has b = 0.
  bool is_analytic() const noexcept;

  MonomialCombo conj() const;
  MonomialCombo operator+(const MonomialCombo& other) const;
  MonomialCombo operator-(const MonomialCombo& other) const;
  MonomialCombo operator*(const MonomialCombo& other) const;
  MonomialCombo operator*(complex s) const;

  complex operator()(std::span<const complex> z) const;

  bool operator==(const MonomialCombo&) const = default;

 private:
  int n_;
  std::vector<Term> terms_;
};

/// g(z) = |z_1|^{2 s_1} ... |z_n|^{2 s_n} h(|z|).
///
/// For n = 1 the factor |z_1|^{2 s_1} is folded into h and s_1 is stored
/// as 0, so that s_j l_j = 0 reads the same in every dimension.
class SeparatelyRadialSymbol {
 public:
  SeparatelyRadialSymbol(std::vector<double> s, RadialProfile h);
  static SeparatelyRadialSymbol radial(int n, RadialProfile h);

  int dim() const noexcept { return static_cast<int>(s_.size()); }
  std::span<const double> s() const noexcept { return s_; }
  const RadialProfile& h() const noexcept { return h_; }
  double sigma_s() const noexcept;
  bool is_radial() const noexcept { return sigma_s() == 0.0; }
  /// g is constant on the ball (all s_j = 0 and h constant, or h = 0).
  bool is_constant() const;

  complex operator()(std::span<const complex> z) const;

 private:
  std::vector<double> s_;
  RadialProfile h_;
};

/// An n-tuple gamma of integers defining the circle action
/// z -> (e^{i gamma_1 t} z_1, ..., e^{i gamma_n t} z_n).
struct TorusWeight {
  std::vector<int> gamma;

  int dim() const noexcept { return static_cast<int>(gamma.size()); }
};

/// Average of f over the circle action: keeps exactly the terms with
/// gamma . (a - b) = 0.
MonomialCombo torus_average(const MonomialCombo& f, const TorusWeight& gamma);

struct InvarianceFlags {
  /// f(e^{i theta} z) = f(z): every term has |a| = |b|.
  bool circular = true;
  /// axis_modulus[j]: f is unchanged by z_j -> |z_j|, i.e. a_j = b_j on every term.
  std::vector<bool> axis_modulus;
};

InvarianceFlags invariance_flags(const MonomialCombo& f);

/// omega_alpha(g, m) = <T_g e_m, e_m>, the eigenvalue of the diagonal
/// operator T_g on e_m, evaluated as
///   F(m) = prod_j Gamma(m_j+s_j+1)/Gamma(m_j+1) / Gamma(alpha+1) * H(n+|m|),
///   H(w) = Gamma(w+alpha+1)/Gamma(w+sum s) * int_0^1 r^{w+sum s-1} h(r^{1/2}) (1-r)^alpha dr.
/// Exact (closed form) for non-tabulated h.
complex omega(const SpaceParams& p, const SeparatelyRadialSymbol& g, const MultiIndex& m,
              int nodes = 64);

/// Same value with the radial integral always taken by Gauss-Jacobi
/// quadrature; an independent check on the closed forms.
complex omega_quadrature(const SpaceParams& p, const SeparatelyRadialSymbol& g,
                         const MultiIndex& m, int nodes = 64);

/// omega over every |m| <= D.
class OmegaTable {
 public:
  OmegaTable(SpaceParams p, SeparatelyRadialSymbol g, int D, int nodes = 64);

  const SpaceParams& params() const noexcept { return p_; }
  const SeparatelyRadialSymbol& symbol() const noexcept { return g_; }
  const BasisIndexer& indexer() const noexcept { return *indexer_; }
  int degree() const noexcept { return indexer_->degree(); }
  const std::vector<complex>& values() const noexcept { return values_; }

  /// Throws DomainError when |m| > D.
  complex at(const MultiIndex& m) const;

 private:
  SpaceParams p_;
  SeparatelyRadialSymbol g_;
  std::shared_ptr<const BasisIndexer> indexer_;
  std::vector<complex> values_;
};

OmegaTable omega_table(const SpaceParams& p, const SeparatelyRadialSymbol& g, int D);

/// The same function written as a MonomialCombo, when that is possible:
/// every s_j a non-negative integer and h a constant or even polynomial
/// times r^{2q} for an integer q >= 0. Uses |z|^2 = sum_j z_j conj(z_j).
std::optional<MonomialCombo> to_monomial_combo(const SeparatelyRadialSymbol& g);

}  // namespace bergcomm
