#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bergcomm/error.hpp"
#include "bergcomm/symbols.hpp"
#include "bergcomm/toeplitz.hpp"

using namespace bergcomm;

namespace {
MultiIndex mi(std::vector<int> v) { return MultiIndex(std::move(v)); }

MonomialCombo z(int n, int j) { return MonomialCombo::coordinate(n, j); }

SeparatelyRadialSymbol sep(std::vector<double> s, RadialProfile h) {
  return SeparatelyRadialSymbol(std::move(s), std::move(h));
}
}  // namespace

TEST_CASE("canonical form merges duplicates and drops zeros") {
  const auto f = MonomialCombo(2, {Term{mi({1, 0}), mi({0, 0}), 2.0}, Term{mi({1, 0}), mi({0, 0}), -2.0},
                                   Term{mi({0, 1}), mi({0, 1}), 1.0}, Term{mi({0, 1}), mi({0, 1}), 0.5}});
  REQUIRE(f.terms().size() == 1);
  CHECK(f.terms()[0].c == complex(1.5));
  CHECK((z(2, 0) - z(2, 0)).is_zero());
  CHECK(z(2, 0) + z(2, 1) == z(2, 1) + z(2, 0));
}

TEST_CASE("algebra matches pointwise evaluation") {
  const std::vector<complex> pt = {{0.3, -0.1}, {0.2, 0.4}};
  const auto f = z(2, 0) * z(2, 1).conj() * 3.0 + MonomialCombo::constant(2, {0.0, 1.0});
  const auto g = z(2, 0) * z(2, 0) - z(2, 1).conj();
  CHECK(std::abs((f * g)(pt) - f(pt) * g(pt)) <= 1e-15);
  CHECK(std::abs((f + g)(pt) - (f(pt) + g(pt))) <= 1e-15);
  CHECK(std::abs(f.conj()(pt) - std::conj(f(pt))) <= 1e-15);
  CHECK(f.raise() == 1);
  CHECK(g.lower() == 1);
  CHECK(g.degree() == 2);
  CHECK_FALSE(g.is_analytic());
  CHECK((z(2, 0) * z(2, 1)).is_analytic());
}

TEST_CASE("basis elements carry the norm constant") {
  const SpaceParams p(1, 0.0);
  const auto e2 = MonomialCombo::basis_element(p, mi({2}));
  REQUIRE(e2.terms().size() == 1);
  CHECK(e2.terms()[0].c.real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("torus averages") {
  const TorusWeight ones{{1, 1}};
  const auto f = z(2, 0) * z(2, 1).conj();
  CHECK(torus_average(f, ones) == f);
  CHECK(torus_average(z(2, 0), ones).is_zero());
  const auto abs1 = z(2, 0) * z(2, 0).conj();
  CHECK(torus_average(z(2, 0) * z(2, 0) * z(2, 1).conj() + abs1, ones) == abs1);
}

TEST_CASE("torus averaging is idempotent and linear") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 2);
  std::uniform_int_distribution<int> gw(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    MonomialCombo f(3);
    for (int t = 0; t < 5; ++t) {
      f = f + MonomialCombo::monomial(mi({e(rng), e(rng), e(rng)}), mi({e(rng), e(rng), e(rng)}), complex(t + 1, -t));
    }
    const TorusWeight w{{gw(rng), gw(rng), gw(rng)}};
    const auto once = torus_average(f, w);
    CHECK(torus_average(once, w) == once);
    CHECK(torus_average(f - once, w).is_zero());
  }
}

TEST_CASE("invariance flags") {
  const auto a = invariance_flags(z(2, 0) * z(2, 1).conj());
  CHECK(a.circular);
  CHECK(a.axis_modulus == std::vector<bool>{false, false});
  const auto b = invariance_flags(z(2, 0) * z(2, 0).conj());
  CHECK(b.circular);
  CHECK(b.axis_modulus == std::vector<bool>{true, true});
  CHECK_FALSE(invariance_flags(z(2, 0)).circular);
}

TEST_CASE("omega examples") {
  const auto one = RadialProfile::constant(1.0);
  for (const auto& m : enumerate(2, 3)) {
    CHECK(omega(SpaceParams(2, 0.3), sep({0, 0}, one), m) == complex(1.0));
  }
  const SpaceParams p1(1, 0.0);
  const auto abs2 = SeparatelyRadialSymbol::radial(1, RadialProfile::power(2.0));
  CHECK(omega(p1, abs2, mi({0})).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(omega(p1, abs2, mi({1})).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  const SpaceParams p2(2, 0.0);
  CHECK(omega(p2, sep({1, 0}, one), mi({0, 0})).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(omega(p2, sep({1, 0}, one), mi({1, 0})).real() == doctest::Approx(0.5).epsilon(1e-14));

  const auto table = omega_table(p1, abs2, 2);
  CHECK(table.at(mi({0})).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(table.at(mi({1})).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(table.at(mi({2})).real() == doctest::Approx(0.75).epsilon(1e-14));
  CHECK_THROWS_AS(table.at(mi({3})), DomainError);
}

TEST_CASE("radial omega depends only on |m|") {
  const SpaceParams p(3, 0.8);
  const auto g = SeparatelyRadialSymbol::radial(3, RadialProfile::even_poly({1.0, -2.0, {0.5, 0.5}}));
  for (int d = 0; d <= 5; ++d) {
    const auto slice = enumerate_degree(3, d);
    const complex ref = omega(p, g, slice.front());
    for (const auto& m : slice) CHECK(std::abs(omega(p, g, m) - ref) <= 1e-13);
  }
}

TEST_CASE("closed-form omega matches the quadrature route") {
  const SpaceParams p(2, -0.4);
  const std::vector<SeparatelyRadialSymbol> gs = {
      sep({1, 0}, RadialProfile::constant(1.0)),
      sep({0.5, 2}, RadialProfile::power(1.0, 2.0)),
      sep({0, 1.5}, RadialProfile::even_poly({1.0, 3.0})),
  };
  for (const auto& g : gs) {
    for (const auto& m : enumerate(2, 6)) {
      const complex a = omega(p, g, m);
      const complex b = omega_quadrature(p, g, m);
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("integer-exponent omega equals the diagonal of the monomial-combo operator") {
  const SpaceParams p(2, 0.5);
  const std::vector<SeparatelyRadialSymbol> gs = {
      sep({1, 0}, RadialProfile::constant(1.0)),
      sep({1, 2}, RadialProfile::even_poly({1.0, -1.0})),
      sep({0, 0}, RadialProfile::power(4.0, {0.0, 2.0})),
  };
  const int D = 5;
  for (const auto& g : gs) {
    const auto f = to_monomial_combo(g);
    REQUIRE(f.has_value());
    const auto T = assemble(p, *f, D);
    const auto idx = BasisIndexer::make(2, D);
    for (std::size_t i = 0; i < idx->count(); ++i) {
      const auto& m = idx->at(i);
      for (std::size_t j = 0; j < idx->count(); ++j) {
        const complex want = i == j ? omega(p, g, m) : complex(0.0);
        CHECK(std::abs(T.matrix()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) - want) <= 1e-12);
      }
    }
  }
  CHECK_FALSE(to_monomial_combo(sep({0.5, 0}, RadialProfile::constant(1.0))).has_value());
}

TEST_CASE("symbols evaluate pointwise") {
  const std::vector<complex> pt = {{0.3, 0.4}, {0.1, -0.2}};
  const auto g = sep({1, 2}, RadialProfile::even_poly({1.0, 2.0}));
  const double r2 = std::norm(pt[0]) + std::norm(pt[1]);
  const complex expect = std::norm(pt[0]) * std::pow(std::norm(pt[1]), 2) * (1.0 + 2.0 * r2);
  CHECK(std::abs(g(pt) - expect) <= 1e-15);
  CHECK(std::abs((*to_monomial_combo(g))(pt) - expect) <= 1e-15);
}

TEST_CASE("n = 1 folds |z|^{2s} into the profile") {
  const auto g = sep({1.5}, RadialProfile::constant(1.0));
  CHECK(g.s()[0] == 0.0);
  const std::vector<complex> pt = {{0.5, 0.0}};
  CHECK(g(pt).real() == doctest::Approx(std::pow(0.25, 1.5)).epsilon(1e-14));
}
