#pragma once

#include "bergcomm/multiindex.hpp"

namespace bergcomm {

/// Dimension n and weight exponent alpha of the space A^2_alpha on the
/// unit ball of C^n.
class SpaceParams {
 public:
  /// Throws DomainError unless n >= 1 and alpha > -1.
  SpaceParams(int n, double alpha);

  int n() const noexcept { return n_; }
  double alpha() const noexcept { return alpha_; }

  /// ln c_alpha = ln Gamma(n+alpha+1) - ln Gamma(n+1) - ln Gamma(alpha+1).
  double log_c_alpha() const;

  bool operator==(const SpaceParams&) const = default;

 private:
  int n_;
  double alpha_;
};

/// ln Gamma(x) for x > 0.
///
/// Arguments below 15 are lifted with the recurrence
/// Gamma(x) = Gamma(x+k) / (x (x+1) ... (x+k-1)), then the Stirling series
///   (x - 1/2) ln x - x + ln(2 pi)/2 + sum_{k=1..8} B_{2k} / (2k (2k-1) x^{2k-1})
/// is summed with the Bernoulli numbers B_2..B_16. The first omitted term is
/// below 1e-20 at x = 15, so the error is roundoff only: about 1e-14
/// absolute near the zeros at x = 1, 2 and 1e-15 relative elsewhere.
double log_gamma(double x);

/// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a+b).
double log_beta(double a, double b);

/// ln m! = sum_j ln Gamma(m_j + 1)
double log_factorial(const MultiIndex& m);

/// ln N_m where e_m = N_m z^m,
/// N_m^2 = Gamma(n+|m|+alpha+1) / (m! Gamma(n+alpha+1)).
double log_norm_constant(const SpaceParams& p, const MultiIndex& m);
double norm_constant(const SpaceParams& p, const MultiIndex& m);

/// ln d(m,k), where e_m e_k = d(m,k) e_{m+k}. Evaluated entirely in log space.
double log_d_coeff(const SpaceParams& p, const MultiIndex& m, const MultiIndex& k);

/// d(m,k) > 0; exactly 1 when m or k is zero.
double d_coeff(const SpaceParams& p, const MultiIndex& m, const MultiIndex& k);

/// Closed form of d(m, delta_n) for m with m_n = 0:
/// sqrt((n+alpha+1) / (n+|m|+alpha+1)). Throws DomainError if m_n != 0.
double d_coeff_axis(const SpaceParams& p, const MultiIndex& m);

/// d(sL, m) / (d(sL, k) d(sL+k, l)). L must have every component >= 1
/// and s >= 1.
double lemma4_ratio(const SpaceParams& p, const MultiIndex& m, const MultiIndex& k,
                    const MultiIndex& l, const MultiIndex& L, int s);

}  // namespace bergcomm
