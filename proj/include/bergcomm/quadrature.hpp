#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bergcomm/specialfn.hpp"

namespace bergcomm {

using complex = std::complex<double>;

/// A bounded function h on [0,1), the radial factor of a separately radial
/// symbol. Every kind carries an extra factor r^power (power >= 0), which is
/// how |z|^{2s} is folded into h:
///
///   Constant   h(r) = r^power * c
///   Power      h(r) = r^power * c        (Constant with power > 0)
///   EvenPoly   h(r) = r^power * sum_k c_k r^{2k}
///   Table      h(r) = r^power * (piecewise-linear interpolant of samples)
class RadialProfile {
 public:
  enum class Kind { Constant, Power, EvenPoly, Table };

  static RadialProfile constant(complex c);
  static RadialProfile power(double t, complex scale = 1.0);
  static RadialProfile even_poly(std::vector<complex> coeffs);
  /// Samples at strictly increasing abscissae in [0,1]; at least two points.
  /// Values outside [r.front(), r.back()] are held constant.
  static RadialProfile table(std::vector<double> r, std::vector<complex> values);

  Kind kind() const noexcept { return kind_; }
  double power() const noexcept { return power_; }
  const std::vector<complex>& coeffs() const noexcept { return coeffs_; }
  const std::vector<double>& table_r() const noexcept { return table_r_; }
  const std::vector<complex>& table_values() const noexcept { return coeffs_; }

  /// r^t * h, t >= 0.
  RadialProfile times_power(double t) const;

  complex operator()(double r) const;
  /// h(r) / r^power.
  complex base_value(double r) const;

  /// An upper bound for sup |h| on [0,1).
  double bound() const;
  bool is_zero() const;
  /// True when h is constant on [0,1).
  bool is_constant() const;

 private:
  RadialProfile() = default;

  Kind kind_ = Kind::Constant;
  double power_ = 0.0;
  std::vector<complex> coeffs_;  // constant: 1 entry; even poly: c_k; table: samples
  std::vector<double> table_r_;
};

/// Gauss-Jacobi rule for the weight (1-r)^alpha r^beta on [0,1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double alpha = 0.0;
  double beta = 0.0;

  template <class F>
  auto integrate(F&& f) const {
    decltype(f(0.5)) acc{};
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Golub-Welsch: eigen-decomposition of the Jacobi matrix built from the
/// three-term recurrence of the Jacobi polynomials P^(alpha,beta) on [-1,1],
/// mapped to [0,1]. Weights sum to B(alpha+1, beta+1).
QuadratureRule gauss_jacobi(int count, double alpha, double beta = 0.0);

struct RadialIntegral {
  complex value;
  /// Zero for closed forms; for tabulated profiles |Q_N - Q_{N/2}|.
  double error_estimate = 0.0;
};

/// int_0^1 r^{w+sigma_s-1} h(r^{1/2}) (1-r)^alpha dr. Closed Beta-function
/// form for Constant/Power/EvenPoly; Gauss-Jacobi with `nodes` points for
/// Table. Requires w + sigma_s >= 1 and alpha > -1.
RadialIntegral radial_integral(double w, double alpha, double sigma_s, const RadialProfile& h,
                               int nodes = 64);

/// Same integral, always by Gauss-Jacobi quadrature. The fractional part of
/// the r exponent is absorbed into the rule's r^beta weight.
complex radial_integral_gauss_jacobi(double w, double alpha, double sigma_s,
                                     const RadialProfile& h, int nodes);

/// int |z^q|^2 dnu_alpha = q! Gamma(n+alpha+1) / Gamma(n+|q|+alpha+1) = 1/N_q^2.
double ball_monomial_integral(const SpaceParams& p, const MultiIndex& q);

/// int_S |zeta_1|^{2 l_1} ... |zeta_n|^{2 l_n} dsigma
///   = Gamma(n) prod Gamma(l_j+1) / Gamma(n + sum l), l_j > -1.
double sphere_moment(int n, std::span<const double> lambda);

/// int |z_1|^{2 l_1} ... |z_n|^{2 l_n} h(|z|) dnu_alpha through the polar
/// factorization into a spherical moment and a radial integral.
complex separately_radial_moment(const SpaceParams& p, std::span<const double> lambda,
                                 const RadialProfile& h, int nodes = 64);

using PointFunction = std::function<complex(std::span<const complex>)>;

struct McEstimate {
  complex value;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Monte-Carlo estimate of int f dnu_alpha. Points are drawn from nu_alpha
/// itself: direction uniform on the sphere of C^n, |z|^2 ~ Beta(n, alpha+1).
/// The budget is split into a fixed number of chunks with seeds derived from
/// `seed`, so the result does not depend on `workers`.
/// Requires samples >= 1000.
McEstimate mc_ball_integral(const SpaceParams& p, const PointFunction& f, std::size_t samples,
                            std::uint64_t seed, int workers = 1);

}  // namespace bergcomm
