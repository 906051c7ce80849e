#include "bergcomm/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "bergcomm/error.hpp"

namespace bergcomm {

namespace {

using TermKey = std::pair<MultiIndex, MultiIndex>;

std::vector<Term> canonicalize(int n, std::vector<Term> terms) {
  std::map<TermKey, complex> merged;
  for (auto& t : terms) {
    if (t.a.dim() != n || t.b.dim() != n) {
      throw DimensionMismatch("monomial term " + t.a.to_string() + "," + t.b.to_string() +
                              " in dimension " + std::to_string(n));
    }
    auto [it, fresh] = merged.try_emplace(TermKey{t.a, t.b}, t.c);
    if (!fresh) it->second += t.c;
  }
  std::vector<Term> out;
  out.reserve(merged.size());
  for (auto& [key, c] : merged) {
    if (c != 0.0) out.push_back(Term{key.first, key.second, c});
  }
  return out;
}

complex monomial_value(std::span<const complex> z, const MultiIndex& a, const MultiIndex& b) {
  complex v = 1.0;
  for (int j = 0; j < a.dim(); ++j) {
    const auto zj = z[static_cast<std::size_t>(j)];
    for (int e = 0; e < a[j]; ++e) v *= zj;
    for (int e = 0; e < b[j]; ++e) v *= std::conj(zj);
  }
  return v;
}

// (sum_j |z_j|^2)^k as a MonomialCombo.
MonomialCombo norm_power(int n, int k) {
  std::vector<Term> terms;
  for (const auto& mu : enumerate_degree(n, k)) {
    const double coeff = std::round(std::exp(log_gamma(k + 1.0) - log_factorial(mu)));
    terms.push_back(Term{mu, mu, coeff});
  }
  return MonomialCombo(n, std::move(terms));
}

bool is_nonneg_integer(double x) { return x >= 0.0 && std::floor(x) == x && x < 1e6; }

}  // namespace

// ---------------------------------------------------------------- MonomialCombo

MonomialCombo::MonomialCombo(int n) : n_(n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
}

MonomialCombo::MonomialCombo(int n, std::vector<Term> terms) : MonomialCombo(n) {
  terms_ = canonicalize(n, std::move(terms));
}

MonomialCombo MonomialCombo::constant(int n, complex c) {
  return MonomialCombo(n, {Term{MultiIndex::zero(n), MultiIndex::zero(n), c}});
}

MonomialCombo MonomialCombo::monomial(const MultiIndex& a, const MultiIndex& b, complex c) {
  return MonomialCombo(a.dim(), {Term{a, b, c}});
}

MonomialCombo MonomialCombo::coordinate(int n, int j) {
  return monomial(MultiIndex::unit(n, j), MultiIndex::zero(n));
}

MonomialCombo MonomialCombo::basis_element(const SpaceParams& p, const MultiIndex& l) {
  return monomial(l, MultiIndex::zero(p.n()), norm_constant(p, l));
}

int MonomialCombo::raise() const noexcept {
  int r = 0;
  for (const auto& t : terms_) r = std::max(r, t.a.total());
  return r;
}

int MonomialCombo::lower() const noexcept {
  int r = 0;
  for (const auto& t : terms_) r = std::max(r, t.b.total());
  return r;
}

int MonomialCombo::degree() const noexcept {
  int r = 0;
  for (const auto& t : terms_) r = std::max(r, t.a.total() + t.b.total());
  return r;
}

bool MonomialCombo::is_analytic() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.b.is_zero(); });
}

MonomialCombo MonomialCombo::conj() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.b, t.a, std::conj(t.c)});
  return MonomialCombo(n_, std::move(out));
}

MonomialCombo MonomialCombo::operator+(const MonomialCombo& other) const {
  if (other.n_ != n_) throw DimensionMismatch("symbol sum: dimension mismatch");
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return MonomialCombo(n_, std::move(all));
}

MonomialCombo MonomialCombo::operator-(const MonomialCombo& other) const {
  return *this + other * complex(-1.0);
}

MonomialCombo MonomialCombo::operator*(const MonomialCombo& other) const {
  if (other.n_ != n_) throw DimensionMismatch("symbol product: dimension mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& x : terms_) {
    for (const auto& y : other.terms_) out.push_back(Term{x.a + y.a, x.b + y.b, x.c * y.c});
  }
  return MonomialCombo(n_, std::move(out));
}

MonomialCombo MonomialCombo::operator*(complex s) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.c *= s;
  return MonomialCombo(n_, std::move(out));
}

complex MonomialCombo::operator()(std::span<const complex> z) const {
  if (static_cast<int>(z.size()) != n_) throw DimensionMismatch("symbol evaluation: point dimension");
  complex acc = 0.0;
  for (const auto& t : terms_) acc += t.c * monomial_value(z, t.a, t.b);
  return acc;
}

// ------------------------------------------------------- SeparatelyRadialSymbol

SeparatelyRadialSymbol::SeparatelyRadialSymbol(std::vector<double> s, RadialProfile h)
    : s_(std::move(s)), h_(std::move(h)) {
  if (s_.empty()) throw DomainError("separately radial symbol needs n >= 1");
  for (double v : s_) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("exponents s_j must be finite and >= 0");
  }
  if (s_.size() == 1 && s_[0] != 0.0) {
    h_ = h_.times_power(2.0 * s_[0]);
    s_[0] = 0.0;
  }
}

SeparatelyRadialSymbol SeparatelyRadialSymbol::radial(int n, RadialProfile h) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  return SeparatelyRadialSymbol(std::vector<double>(static_cast<std::size_t>(n), 0.0), std::move(h));
}

double SeparatelyRadialSymbol::sigma_s() const noexcept {
  return std::accumulate(s_.begin(), s_.end(), 0.0);
}

bool SeparatelyRadialSymbol::is_constant() const {
  if (h_.is_zero()) return true;
  return sigma_s() == 0.0 && h_.is_constant();
}

complex SeparatelyRadialSymbol::operator()(std::span<const complex> z) const {
  if (z.size() != s_.size()) throw DimensionMismatch("symbol evaluation: point dimension");
  double radial = 1.0;
  double norm2 = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    const double a2 = std::norm(z[j]);
    norm2 += a2;
    if (s_[j] != 0.0) radial *= std::pow(a2, s_[j]);
  }
  return radial * h_(std::sqrt(norm2));
}

// ------------------------------------------------------------ torus / flags

MonomialCombo torus_average(const MonomialCombo& f, const TorusWeight& gamma) {
  if (gamma.dim() != f.dim()) throw DimensionMismatch("torus_average: dimension mismatch");
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    long long dot = 0;
    for (int j = 0; j < f.dim(); ++j) {
      dot += static_cast<long long>(gamma.gamma[static_cast<std::size_t>(j)]) * (t.a[j] - t.b[j]);
    }
    if (dot == 0) kept.push_back(t);
  }
  return MonomialCombo(f.dim(), std::move(kept));
}

InvarianceFlags invariance_flags(const MonomialCombo& f) {
  InvarianceFlags flags;
  flags.axis_modulus.assign(static_cast<std::size_t>(f.dim()), true);
  for (const auto& t : f.terms()) {
    if (t.a.total() != t.b.total()) flags.circular = false;
    for (int j = 0; j < f.dim(); ++j) {
      if (t.a[j] != t.b[j]) flags.axis_modulus[static_cast<std::size_t>(j)] = false;
    }
  }
  return flags;
}

// -------------------------------------------------------------------- omega

namespace {

// log of Gamma(w+alpha+1) / (Gamma(alpha+1) Gamma(w+sum s)) prod_j Gamma(m_j+s_j+1)/Gamma(m_j+1)
double omega_log_prefactor(const SpaceParams& p, const SeparatelyRadialSymbol& g, const MultiIndex& m) {
  const double alpha = p.alpha();
  const double sigma = g.sigma_s();
  const double w = p.n() + m.total();
  double log_pre = -log_gamma(alpha + 1.0) + log_gamma(w + alpha + 1.0) - log_gamma(w + sigma);
  for (int j = 0; j < p.n(); ++j) {
    const double sj = g.s()[static_cast<std::size_t>(j)];
    if (sj == 0.0) continue;
    log_pre += log_gamma(m[j] + sj + 1.0) - log_gamma(m[j] + 1.0);
  }
  return log_pre;
}

void require_omega_dims(const SpaceParams& p, const SeparatelyRadialSymbol& g, const MultiIndex& m) {
  if (g.dim() != p.n() || m.dim() != p.n()) throw DimensionMismatch("omega: dimension mismatch");
}

}  // namespace

complex omega(const SpaceParams& p, const SeparatelyRadialSymbol& g, const MultiIndex& m,
              int nodes) {
  require_omega_dims(p, g, m);
  const RadialProfile& h = g.h();
  // T_c = c I
  if (g.sigma_s() == 0.0 && h.power() == 0.0 && h.is_constant()) return h.base_value(0.0);
  const double w = p.n() + m.total();
  return std::exp(omega_log_prefactor(p, g, m)) *
         radial_integral(w, p.alpha(), g.sigma_s(), h, nodes).value;
}

complex omega_quadrature(const SpaceParams& p, const SeparatelyRadialSymbol& g,
                         const MultiIndex& m, int nodes) {
  require_omega_dims(p, g, m);
  const double w = p.n() + m.total();
  return std::exp(omega_log_prefactor(p, g, m)) *
         radial_integral_gauss_jacobi(w, p.alpha(), g.sigma_s(), g.h(), nodes);
}

OmegaTable::OmegaTable(SpaceParams p, SeparatelyRadialSymbol g, int D, int nodes)
    : p_(p), g_(std::move(g)), indexer_(BasisIndexer::make(p.n(), D)) {
  if (g_.dim() != p_.n()) throw DimensionMismatch("omega_table: dimension mismatch");
  values_.reserve(indexer_->count());
  for (const auto& m : indexer_->order()) values_.push_back(omega(p_, g_, m, nodes));
}

complex OmegaTable::at(const MultiIndex& m) const {
  auto pos = indexer_->position(m);
  if (!pos) throw DomainError("omega table: " + m.to_string() + " is beyond the degree cap");
  return values_[*pos];
}

OmegaTable omega_table(const SpaceParams& p, const SeparatelyRadialSymbol& g, int D) {
  if (D < 0) throw DomainError("omega_table: degree cap must be >= 0");
  return OmegaTable(p, g, D);
}

std::optional<MonomialCombo> to_monomial_combo(const SeparatelyRadialSymbol& g) {
  const int n = g.dim();
  const RadialProfile& h = g.h();
  if (h.kind() == RadialProfile::Kind::Table) return std::nullopt;
  if (!is_nonneg_integer(h.power() / 2.0)) return std::nullopt;
  std::vector<int> s_int;
  for (double sj : g.s()) {
    if (!is_nonneg_integer(sj)) return std::nullopt;
    s_int.push_back(static_cast<int>(sj));
  }

  const MultiIndex s_index(s_int);
  MonomialCombo prefix = MonomialCombo::monomial(s_index, s_index);
  prefix = prefix * norm_power(n, static_cast<int>(h.power() / 2.0));

  MonomialCombo radial(n);
  for (std::size_t k = 0; k < h.coeffs().size(); ++k) {
    if (h.coeffs()[k] == 0.0) continue;
    radial = radial + norm_power(n, static_cast<int>(k)) * h.coeffs()[k];
  }
  return prefix * radial;
}

}  // namespace bergcomm
