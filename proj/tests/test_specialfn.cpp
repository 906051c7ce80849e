#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bergcomm/error.hpp"
#include "bergcomm/multiindex.hpp"
#include "bergcomm/specialfn.hpp"

using namespace bergcomm;

namespace {
MultiIndex mi(std::vector<int> v) { return MultiIndex(std::move(v)); }

// N_m^2 from the C library's lgamma, as an independent oracle.
double oracle_log_norm_sq(const SpaceParams& p, const MultiIndex& m) {
  const double base = p.n() + p.alpha() + 1.0;
  double s = std::lgamma(base + m.total()) - std::lgamma(base);
  for (int v : m.components()) s -= std::lgamma(v + 1.0);
  return s;
}
}  // namespace

TEST_CASE("log_gamma at known points") {
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
  CHECK(std::abs(log_gamma(1.0)) <= 1e-14);
  CHECK(std::abs(log_gamma(2.0)) <= 1e-14);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("log_gamma agrees with lgamma to 1e-13 relative") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::exp(-6.0 + 13.0 * u(rng));  // 2.5e-3 .. 1.6e3
    const double ref = std::lgamma(x);
    CHECK(std::abs(log_gamma(x) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("norm constants") {
  CHECK(norm_constant(SpaceParams(1, 0.0), mi({0})) == 1.0);
  CHECK(norm_constant(SpaceParams(1, 0.0), mi({2})) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(norm_constant(SpaceParams(2, 0.0), mi({1, 1})) == doctest::Approx(std::sqrt(12.0)).epsilon(1e-14));
  for (double alpha : {-0.5, 0.0, 1.3}) {
    const SpaceParams p(3, alpha);
    for (const auto& m : enumerate(3, 6)) {
      CHECK(2.0 * log_norm_constant(p, m) == doctest::Approx(oracle_log_norm_sq(p, m)).epsilon(1e-13));
    }
  }
}

TEST_CASE("d_coeff examples") {
  const SpaceParams p1(1, 0.0), p2(2, 0.0);
  CHECK(d_coeff(p1, mi({0}), mi({5})) == 1.0);
  CHECK(d_coeff(p2, mi({3, 1}), mi({0, 0})) == 1.0);
  CHECK(d_coeff(p1, mi({1}), mi({1})) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(d_coeff(p2, mi({1, 0}), mi({1, 0})) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
}

TEST_CASE("d_coeff squared is the exact rational at alpha = 0") {
  // d(m,k)^2 = (c+|m|-1)!(c+|k|-1)! / ((c+|m+k|-1)!(c-1)!) * prod C(m_j+k_j, m_j), c = n+1
  const SpaceParams p(2, 0.0);
  const auto fact = [](int x) {
    long double f = 1;
    for (int i = 2; i <= x; ++i) f *= i;
    return f;
  };
  for (const auto& m : enumerate(2, 5)) {
    for (const auto& k : enumerate(2, 5)) {
      const int c = 3;
      long double exact = fact(c + m.total() - 1) * fact(c + k.total() - 1) /
                          (fact(c + m.total() + k.total() - 1) * fact(c - 1));
      for (int j = 0; j < 2; ++j) exact *= fact(m[j] + k[j]) / (fact(m[j]) * fact(k[j]));
      const double d = d_coeff(p, m, k);
      CHECK(d * d == doctest::Approx(static_cast<double>(exact)).epsilon(1e-13));
    }
  }
}

TEST_CASE("pointwise product e_m e_k = d(m,k) e_{m+k} and symmetry") {
  for (double alpha : {-0.7, 0.0, 2.5}) {
    const SpaceParams p(3, alpha);
    for (const auto& m : enumerate(3, 3)) {
      for (const auto& k : enumerate(3, 3)) {
        const double lhs = norm_constant(p, m) * norm_constant(p, k);
        const double rhs = d_coeff(p, m, k) * norm_constant(p, m + k);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
        CHECK(d_coeff(p, m, k) == doctest::Approx(d_coeff(p, k, m)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("d_coeff cocycle: d(l,m) d(l+m,k) = d(m,k) d(m+k,l)") {
  const SpaceParams p(2, 0.4);
  for (const auto& l : enumerate(2, 2))
    for (const auto& m : enumerate(2, 2))
      for (const auto& k : enumerate(2, 2)) {
        const double a = d_coeff(p, l, m) * d_coeff(p, l + m, k);
        const double b = d_coeff(p, m, k) * d_coeff(p, m + k, l);
        CHECK(a == doctest::Approx(b).epsilon(1e-13));
      }
}

TEST_CASE("d_coeff_axis closed form") {
  CHECK(d_coeff_axis(SpaceParams(2, 0.0), mi({0, 0})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d_coeff_axis(SpaceParams(2, 0.0), mi({3, 0})) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(d_coeff_axis(SpaceParams(2, 1.0), mi({1, 0})) == doctest::Approx(std::sqrt(0.8)).epsilon(1e-14));
  const SpaceParams p(3, 0.3);
  for (const auto& m : enumerate(3, 5)) {
    if (m[2] != 0) {
      CHECK_THROWS_AS(d_coeff_axis(p, m), DomainError);
      continue;
    }
    CHECK(d_coeff_axis(p, m) == doctest::Approx(d_coeff(p, m, MultiIndex::unit(3, 2))).epsilon(1e-13));
  }
}

TEST_CASE("lemma4_ratio") {
  const SpaceParams p1(1, 0.0);
  CHECK(lemma4_ratio(SpaceParams(2, 0.0), mi({0, 0}), mi({0, 0}), mi({0, 0}), mi({1, 2}), 3) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const double expect = d_coeff(p1, mi({1}), mi({1})) / (d_coeff(p1, mi({1}), mi({1})) * d_coeff(p1, mi({2}), mi({1})));
  CHECK(lemma4_ratio(p1, mi({1}), mi({1}), mi({1}), mi({1}), 1) == doctest::Approx(expect).epsilon(1e-14));
  const double v = lemma4_ratio(SpaceParams(2, 0.0), mi({1, 0}), mi({0, 1}), mi({1, 1}), mi({1, 1}), 2);
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
}

TEST_CASE("lemma4_ratio stays bounded and settles in s") {
  const SpaceParams p(2, 0.0);
  const auto m = mi({2, 1}), k = mi({0, 3}), l = mi({1, 2}), L = mi({1, 1});
  double lo = INFINITY, hi = 0.0, prev = 0.0, last = 0.0;
  for (int s = 1; s <= 50; ++s) {
    const double v = lemma4_ratio(p, m, k, l, L, s);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    prev = last;
    last = v;
  }
  CHECK(std::isfinite(hi));
  CHECK(lo > 0.0);
  CHECK(std::abs(last - prev) / last <= 1e-2);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SpaceParams(0, 0.0), DomainError);
  CHECK_THROWS_AS(SpaceParams(2, -1.0), DomainError);
  CHECK_THROWS_AS(d_coeff(SpaceParams(2, 0.0), mi({1}), mi({1, 0})), DimensionMismatch);
}
