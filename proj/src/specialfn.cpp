#include "bergcomm/specialfn.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "bergcomm/error.hpp"

namespace bergcomm {

namespace {

constexpr double kStirlingThreshold = 15.0;

// B_{2k} / (2k (2k-1)) for k = 1..8.
constexpr std::array<double, 8> kStirlingCoeffs = {
    1.0 / 12.0,          -1.0 / 360.0,  1.0 / 1260.0,
    -1.0 / 1680.0,       1.0 / 1188.0,  -691.0 / 360360.0,
    1.0 / 156.0,         -3617.0 / 122400.0,
};

double stirling(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Horner in 1/x^2, highest order first.
  double series = 0.0;
  for (auto it = kStirlingCoeffs.rbegin(); it != kStirlingCoeffs.rend(); ++it) {
    series = series * inv2 + *it;
  }
  series *= inv;
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

void require_dim(const SpaceParams& p, const MultiIndex& m) {
  if (m.dim() != p.n()) {
    throw DimensionMismatch("multi-index " + m.to_string() + " in dimension " +
                            std::to_string(p.n()));
  }
}

}  // namespace

SpaceParams::SpaceParams(int n, double alpha) : n_(n), alpha_(alpha) {
  if (n < 1) throw DomainError("dimension n must be >= 1");
  if (!(alpha > -1.0) || !std::isfinite(alpha)) throw DomainError("alpha must be a finite real > -1");
}

double SpaceParams::log_c_alpha() const {
  return log_gamma(n_ + alpha_ + 1.0) - log_gamma(n_ + 1.0) - log_gamma(alpha_ + 1.0);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be > 0");
  if (std::isinf(x)) return x;
  if (x >= kStirlingThreshold) return stirling(x);
  double prod = 1.0;
  double y = x;
  while (y < kStirlingThreshold) {
    prod *= y;
    y += 1.0;
  }
  return stirling(y) - std::log(prod);
}

double log_beta(double a, double b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

double log_factorial(const MultiIndex& m) {
  double s = 0.0;
  for (int v : m.components()) {
    if (v > 1) s += log_gamma(v + 1.0);
  }
  return s;
}

double log_norm_constant(const SpaceParams& p, const MultiIndex& m) {
  require_dim(p, m);
  if (m.is_zero()) return 0.0;
  const double base = p.n() + p.alpha() + 1.0;
  return 0.5 * (log_gamma(base + m.total()) - log_factorial(m) - log_gamma(base));
}

double norm_constant(const SpaceParams& p, const MultiIndex& m) {
  return std::exp(log_norm_constant(p, m));
}

double log_d_coeff(const SpaceParams& p, const MultiIndex& m, const MultiIndex& k) {
  require_dim(p, m);
  require_dim(p, k);
  if (m.is_zero() || k.is_zero()) return 0.0;
  const double base = p.n() + p.alpha() + 1.0;
  double log_sq = log_gamma(base + m.total()) + log_gamma(base + k.total()) -
                  log_gamma(base + m.total() + k.total()) - log_gamma(base);
  // (m+k)! / (m! k!) = prod_j C(m_j + k_j, m_j)
  for (int j = 0; j < p.n(); ++j) {
    if (m[j] == 0 || k[j] == 0) continue;
    log_sq += log_gamma(m[j] + k[j] + 1.0) - log_gamma(m[j] + 1.0) - log_gamma(k[j] + 1.0);
  }
  return 0.5 * log_sq;
}

double d_coeff(const SpaceParams& p, const MultiIndex& m, const MultiIndex& k) {
  return std::exp(log_d_coeff(p, m, k));
}

double d_coeff_axis(const SpaceParams& p, const MultiIndex& m) {
  require_dim(p, m);
  if (m[p.n() - 1] != 0) throw DomainError("d_coeff_axis: last component must be 0");
  const double base = p.n() + p.alpha() + 1.0;
  return std::sqrt(base / (base + m.total()));
}

double lemma4_ratio(const SpaceParams& p, const MultiIndex& m, const MultiIndex& k,
                    const MultiIndex& l, const MultiIndex& L, int s) {
  require_dim(p, L);
  if (s < 1) throw DomainError("lemma4_ratio: s must be >= 1");
  for (int v : L.components()) {
    if (v < 1) throw DomainError("lemma4_ratio: every component of L must be >= 1");
  }
  const MultiIndex sL = L.scaled(s);
  return std::exp(log_d_coeff(p, sL, m) - log_d_coeff(p, sL, k) - log_d_coeff(p, sL + k, l));
}

}  // namespace bergcomm
