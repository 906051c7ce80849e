#include "bergcomm/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include "bergcomm/error.hpp"

namespace bergcomm {

namespace {

constexpr std::size_t kMcChunks = 16;

}  // namespace

// ---------------------------------------------------------------- RadialProfile

RadialProfile RadialProfile::constant(complex c) {
  RadialProfile h;
  h.kind_ = Kind::Constant;
  h.coeffs_ = {c};
  return h;
}

RadialProfile RadialProfile::power(double t, complex scale) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("power profile: exponent must be >= 0");
  RadialProfile h;
  h.kind_ = Kind::Power;
  h.power_ = t;
  h.coeffs_ = {scale};
  return h;
}

RadialProfile RadialProfile::even_poly(std::vector<complex> coeffs) {
  if (coeffs.empty()) throw DomainError("even_poly profile needs at least one coefficient");
  RadialProfile h;
  h.kind_ = Kind::EvenPoly;
  h.coeffs_ = std::move(coeffs);
  return h;
}

RadialProfile RadialProfile::table(std::vector<double> r, std::vector<complex> values) {
  if (r.size() < 2) throw DomainError("table profile needs at least 2 samples");
  if (r.size() != values.size()) throw DomainError("table profile: abscissae/values length mismatch");
  if (!(r.front() >= 0.0) || !(r.back() <= 1.0)) throw DomainError("table abscissae must lie in [0,1]");
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (!(r[i] > r[i - 1])) throw DomainError("table abscissae must be strictly increasing");
  }
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("table values must be finite");
    }
  }
  RadialProfile h;
  h.kind_ = Kind::Table;
  h.table_r_ = std::move(r);
  h.coeffs_ = std::move(values);
  return h;
}

RadialProfile RadialProfile::times_power(double t) const {
  if (!(t >= 0.0)) throw DomainError("times_power: exponent must be >= 0");
  RadialProfile h = *this;
  h.power_ += t;
  if (h.kind_ == Kind::Constant && h.power_ > 0.0) h.kind_ = Kind::Power;
  return h;
}

complex RadialProfile::base_value(double r) const {
  switch (kind_) {
    case Kind::Constant:
    case Kind::Power:
      return coeffs_.front();
    case Kind::EvenPoly: {
      const double r2 = r * r;
      complex acc = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r2 + *it;
      return acc;
    }
    case Kind::Table: {
      if (r <= table_r_.front()) return coeffs_.front();
      if (r >= table_r_.back()) return coeffs_.back();
      const auto hi = static_cast<std::size_t>(
          std::upper_bound(table_r_.begin(), table_r_.end(), r) - table_r_.begin());
      const std::size_t lo = hi - 1;
      const double t = (r - table_r_[lo]) / (table_r_[hi] - table_r_[lo]);
      return coeffs_[lo] + t * (coeffs_[hi] - coeffs_[lo]);
    }
  }
  return 0.0;
}

complex RadialProfile::operator()(double r) const {
  const complex b = base_value(r);
  return power_ == 0.0 ? b : std::pow(r, power_) * b;
}

double RadialProfile::bound() const {
  double b = 0.0;
  if (kind_ == Kind::EvenPoly) {
    for (const auto& c : coeffs_) b += std::abs(c);
  } else {
    for (const auto& c : coeffs_) b = std::max(b, std::abs(c));
  }
  return b;
}

bool RadialProfile::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](complex c) { return c == 0.0; });
}

bool RadialProfile::is_constant() const {
  if (is_zero()) return true;
  if (power_ != 0.0) return false;
  switch (kind_) {
    case Kind::Constant:
    case Kind::Power:
      return true;
    case Kind::EvenPoly:
      return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](complex c) { return c == 0.0; });
    case Kind::Table:
      return std::all_of(coeffs_.begin(), coeffs_.end(),
                         [&](complex c) { return c == coeffs_.front(); });
  }
  return false;
}

// ----------------------------------------------------------------- Gauss-Jacobi

QuadratureRule gauss_jacobi(int count, double alpha, double beta) {
  if (count < 1) throw DomainError("gauss_jacobi: need at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("gauss_jacobi: exponents must be > -1");
  const double a = alpha;
  const double b = beta;
  const auto N = static_cast<Eigen::Index>(count);

  Eigen::VectorXd diag(N);
  Eigen::VectorXd sub(std::max<Eigen::Index>(N - 1, 1));
  diag(0) = (b - a) / (a + b + 2.0);
  for (Eigen::Index k = 1; k < N; ++k) {
    const double s = 2.0 * static_cast<double>(k) + a + b;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
  }
  for (Eigen::Index k = 1; k < N; ++k) {
    const auto kk = static_cast<double>(k);
    const double s = 2.0 * kk + a + b;
    double beta_k;
    if (k == 1) {
      // (k+a+b)/(2k+a+b-1) == 1 at k = 1
      beta_k = 4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0));
    } else {
      beta_k = 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(beta_k);
  }

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.nodes.resize(static_cast<std::size_t>(count));
  rule.weights.resize(static_cast<std::size_t>(count));
  const double mass = std::exp(log_beta(alpha + 1.0, beta + 1.0));
  if (count == 1) {
    rule.nodes[0] = 0.5 * (1.0 + diag(0));
    rule.weights[0] = mass;
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  Eigen::VectorXd subdiag = sub.head(N - 1);
  solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error("gauss_jacobi: eigen-decomposition failed");
  for (Eigen::Index i = 0; i < N; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 + solver.eigenvalues()(i));
    rule.weights[static_cast<std::size_t>(i)] = mass * v0 * v0;
  }
  return rule;
}

// ------------------------------------------------------------- radial integrals

namespace {

void check_radial_args(double w, double alpha, double sigma_s) {
  if (!(alpha > -1.0)) throw DomainError("radial_integral: alpha must be > -1");
  if (!(sigma_s >= 0.0)) throw DomainError("radial_integral: sigma_s must be >= 0");
  if (!(w + sigma_s >= 1.0)) throw DomainError("radial_integral: requires w + sigma_s >= 1");
}

// r exponent of the integrand once h(r^{1/2}) contributes r^{power/2}.
double total_exponent(double w, double sigma_s, const RadialProfile& h) {
  return w + sigma_s - 1.0 + 0.5 * h.power();
}

complex gauss_jacobi_sum(double exponent, double alpha, const RadialProfile& h, int nodes) {
  // The r^{power/2} part of h(sqrt r) is already inside `exponent`.
  const double whole = std::floor(exponent);
  const QuadratureRule rule = gauss_jacobi(nodes, alpha, exponent - whole);
  return rule.integrate(
      [&](double r) -> complex { return std::pow(r, whole) * h.base_value(std::sqrt(r)); });
}

}  // namespace

complex radial_integral_gauss_jacobi(double w, double alpha, double sigma_s,
                                     const RadialProfile& h, int nodes) {
  check_radial_args(w, alpha, sigma_s);
  const double e = total_exponent(w, sigma_s, h);
  if (h.kind() == RadialProfile::Kind::EvenPoly) {
    // h(sqrt r) r^e = sum_k c_k r^{e+k}; integrate each power so the
    // polynomial factor is exact under the rule.
    const double whole = std::floor(e);
    const QuadratureRule rule = gauss_jacobi(nodes, alpha, e - whole);
    complex acc = 0.0;
    for (std::size_t k = 0; k < h.coeffs().size(); ++k) {
      const double pk = whole + static_cast<double>(k);
      acc += h.coeffs()[k] * rule.integrate([&](double r) { return std::pow(r, pk); });
    }
    return acc;
  }
  return gauss_jacobi_sum(e, alpha, h, nodes);
}

RadialIntegral radial_integral(double w, double alpha, double sigma_s, const RadialProfile& h,
                               int nodes) {
  check_radial_args(w, alpha, sigma_s);
  const double e = total_exponent(w, sigma_s, h);
  switch (h.kind()) {
    case RadialProfile::Kind::Constant:
    case RadialProfile::Kind::Power:
      return {h.coeffs().front() * std::exp(log_beta(e + 1.0, alpha + 1.0)), 0.0};
    case RadialProfile::Kind::EvenPoly: {
      complex acc = 0.0;
      for (std::size_t k = 0; k < h.coeffs().size(); ++k) {
        if (h.coeffs()[k] == 0.0) continue;
        acc += h.coeffs()[k] * std::exp(log_beta(e + static_cast<double>(k) + 1.0, alpha + 1.0));
      }
      return {acc, 0.0};
    }
    case RadialProfile::Kind::Table: {
      const complex fine = gauss_jacobi_sum(e, alpha, h, nodes);
      const complex coarse = gauss_jacobi_sum(e, alpha, h, std::max(1, nodes / 2));
      return {fine, std::abs(fine - coarse)};
    }
  }
  throw Error("radial_integral: unknown profile kind");
}

double ball_monomial_integral(const SpaceParams& p, const MultiIndex& q) {
  if (q.dim() != p.n()) throw DimensionMismatch("ball_monomial_integral: dimension mismatch");
  if (q.is_zero()) return 1.0;
  const double base = p.n() + p.alpha() + 1.0;
  return std::exp(log_factorial(q) + log_gamma(base) - log_gamma(base + q.total()));
}

double sphere_moment(int n, std::span<const double> lambda) {
  if (static_cast<int>(lambda.size()) != n) throw DimensionMismatch("sphere_moment: dimension mismatch");
  double sum = 0.0;
  double log_num = log_gamma(static_cast<double>(n));
  for (double l : lambda) {
    if (!(l > -1.0)) throw DomainError("sphere_moment: exponents must be > -1");
    sum += l;
    log_num += log_gamma(l + 1.0);
  }
  return std::exp(log_num - log_gamma(n + sum));
}

complex separately_radial_moment(const SpaceParams& p, std::span<const double> lambda,
                                 const RadialProfile& h, int nodes) {
  const int n = p.n();
  if (static_cast<int>(lambda.size()) != n) {
    throw DimensionMismatch("separately_radial_moment: dimension mismatch");
  }
  double sum = 0.0;
  for (double l : lambda) sum += l;
  // int |z^lambda|^2 h dnu_alpha
  //   = Gamma(n+alpha+1)/Gamma(alpha+1) * prod Gamma(l_j+1)/Gamma(n+sum l) * int_0^1 ...
  const double log_pre = log_gamma(n + p.alpha() + 1.0) - log_gamma(p.alpha() + 1.0) +
                         std::log(sphere_moment(n, lambda)) - log_gamma(static_cast<double>(n));
  return std::exp(log_pre) * radial_integral(static_cast<double>(n), p.alpha(), sum, h, nodes).value;
}

// ------------------------------------------------------------------ Monte Carlo

namespace {

struct Accumulator {
  std::size_t count = 0;
  complex mean = 0.0;
  double m2 = 0.0;

  void push(complex x) {
    ++count;
    const complex delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += std::real(std::conj(delta) * (x - mean));
  }

  void merge(const Accumulator& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const auto na = static_cast<double>(count);
    const auto nb = static_cast<double>(o.count);
    const complex delta = o.mean - mean;
    mean += delta * (nb / (na + nb));
    m2 += o.m2 + std::norm(delta) * na * nb / (na + nb);
    count += o.count;
  }
};

Accumulator run_chunk(const SpaceParams& p, const PointFunction& f, std::size_t samples,
                      std::uint64_t seed, std::size_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::gamma_distribution<double> radial_a(static_cast<double>(p.n()), 1.0);
  std::gamma_distribution<double> radial_b(p.alpha() + 1.0, 1.0);

  const auto n = static_cast<std::size_t>(p.n());
  std::vector<complex> z(n);
  Accumulator acc;
  for (std::size_t i = 0; i < samples; ++i) {
    double norm2 = 0.0;
    for (auto& zj : z) {
      zj = complex(normal(rng), normal(rng));
      norm2 += std::norm(zj);
    }
    const double x = radial_a(rng);
    const double y = radial_b(rng);
    const double r = std::sqrt(x / (x + y));
    const double scale = r / std::sqrt(norm2);
    for (auto& zj : z) zj *= scale;
    const complex v = f(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("mc_ball_integral: integrand evaluation failure (non-finite value)");
    }
    acc.push(v);
  }
  return acc;
}

}  // namespace

McEstimate mc_ball_integral(const SpaceParams& p, const PointFunction& f, std::size_t samples,
                            std::uint64_t seed, int workers) {
  if (samples < 1000) throw DomainError("mc_ball_integral: samples must be >= 1000");
  std::vector<std::size_t> budget(kMcChunks, samples / kMcChunks);
  for (std::size_t c = 0; c < samples % kMcChunks; ++c) ++budget[c];

  std::vector<Accumulator> parts(kMcChunks);
  std::vector<std::exception_ptr> errors(kMcChunks);
  auto work = [&](std::size_t c) {
    try {
      parts[c] = run_chunk(p, f, budget[c], seed, c);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  const auto nworkers = static_cast<std::size_t>(std::clamp(workers, 1, static_cast<int>(kMcChunks)));
  if (nworkers == 1) {
    for (std::size_t c = 0; c < kMcChunks; ++c) work(c);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < nworkers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < kMcChunks; c += nworkers) work(c);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Accumulator total;
  for (const auto& part : parts) total.merge(part);
  McEstimate out;
  out.value = total.mean;
  out.samples = total.count;
  out.std_error = std::sqrt(total.m2 / static_cast<double>(total.count - 1) /
                            static_cast<double>(total.count));
  return out;
}

}  // namespace bergcomm
