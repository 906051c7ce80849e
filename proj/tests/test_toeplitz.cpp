#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bergcomm/error.hpp"
#include "bergcomm/quadrature.hpp"
#include "bergcomm/symbols.hpp"
#include "bergcomm/toeplitz.hpp"

using namespace bergcomm;

namespace {
MultiIndex mi(std::vector<int> v) { return MultiIndex(std::move(v)); }
MonomialCombo z(int n, int j) { return MonomialCombo::coordinate(n, j); }

MonomialCombo random_combo(std::mt19937_64& rng, int n, int max_exp, int terms) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::normal_distribution<double> c;
  MonomialCombo f(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (auto& x : a) x = e(rng);
    for (auto& x : b) x = e(rng);
    f = f + MonomialCombo::monomial(MultiIndex(a), MultiIndex(b), {c(rng), c(rng)});
  }
  return f;
}
}  // namespace

TEST_CASE("entry examples") {
  const SpaceParams p1(1, 0.0), p2(2, 0.0);
  CHECK(toeplitz_entry(p1, z(1, 0), mi({0}), mi({1})).real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  const auto abs2 = z(1, 0) * z(1, 0).conj();
  CHECK(toeplitz_entry(p1, abs2, mi({1}), mi({1})).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(toeplitz_entry(p2, z(2, 0) * z(2, 1).conj(), mi({0, 1}), mi({1, 0})).real() ==
        doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("entries agree with a Monte-Carlo inner product") {
  const SpaceParams p(2, 0.0);
  const auto f = z(2, 0) * z(2, 1).conj();
  const double w = norm_constant(p, mi({0, 1})) * norm_constant(p, mi({1, 0}));
  const auto mc = mc_ball_integral(
      p, [&](std::span<const complex> x) { return f(x) * x[1] * std::conj(x[0]) * w; }, 200000, 21);
  CHECK(std::abs(mc.value - 0.25) <= 4.0 * mc.std_error);
}

TEST_CASE("apply") {
  const SpaceParams p(2, 0.3);
  for (const auto& l : enumerate(2, 2)) {
    const auto e_l = MonomialCombo::basis_element(p, l);
    for (const auto& m : enumerate(2, 3)) {
      const auto out = apply(p, e_l, m);
      REQUIRE(out.size() == 1);
      CHECK(out[0].first == m + l);
      CHECK(out[0].second.real() == doctest::Approx(d_coeff(p, l, m)).epsilon(1e-13));
    }
  }
  CHECK(apply(p, z(2, 0).conj(), mi({0, 0})).empty());

  const SpaceParams p1(1, 0.0);
  const auto out = apply(p1, z(1, 0) + z(1, 0).conj(), mi({1}));
  REQUIRE(out.size() == 2);
  CHECK(out[0].first == mi({0}));
  CHECK(out[0].second.real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(out[1].first == mi({2}));
  CHECK(out[1].second == toeplitz_entry(p1, z(1, 0), mi({1}), mi({2})));
}

TEST_CASE("assemble examples") {
  const SpaceParams p1(1, 0.0);
  CHECK(assemble(p1, MonomialCombo(1), 4).matrix().norm() == 0.0);
  const auto T = assemble(p1, z(1, 0), 2);
  CHECK(T.raise() == 1);
  CHECK(T.entry(mi({1}), mi({0})).real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(T.entry(mi({2}), mi({1})).real() == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(T.valid_columns() == std::vector<std::size_t>{0, 1});

  const SpaceParams p2(2, 0.0);
  const auto D = assemble(p2, z(2, 0) * z(2, 0).conj(), 1);
  CHECK(D.matrix()(0, 0).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(D.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(D.matrix()(2, 2).real() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(assemble(p2, z(2, 0) * z(2, 1), 1), DomainError);
}

TEST_CASE("conjugate symbol gives the adjoint matrix") {
  std::mt19937_64 rng(17);
  const SpaceParams p(2, 0.6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_combo(rng, 2, 2, 4);
    const int D = std::max(f.raise(), f.lower()) + 3;
    const auto A = assemble(p, f, D).matrix();
    const auto B = assemble(p, f.conj(), D).matrix();
    CHECK((A.adjoint() - B).cwiseAbs().maxCoeff() <= 1e-13 * std::max(1.0, A.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("diagonal operator of a separately radial symbol matches omega") {
  const SpaceParams p(3, 0.2);
  const SeparatelyRadialSymbol g({0.5, 1.0, 0.0}, RadialProfile::power(1.0));
  const auto T = assemble_diagonal(p, g, 3);
  const auto& idx = T.indexer();
  for (std::size_t i = 0; i < T.size(); ++i) {
    CHECK(std::abs(T.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) - omega(p, g, idx.at(i))) <= 1e-15);
  }
  CHECK((T.matrix() - Matrix(T.matrix().diagonal().asDiagonal())).norm() == 0.0);
}

TEST_CASE("commutators") {
  const SpaceParams p(2, 0.0);
  const auto A = assemble(p, z(2, 0) * z(2, 1).conj(), 6);
  CHECK(commutator(A, A).matrix().cwiseAbs().maxCoeff() == 0.0);
  const auto B = assemble_diagonal(p, SeparatelyRadialSymbol::radial(2, RadialProfile::power(2.0)), 6);
  CHECK(commutator(A, B).matrix().cwiseAbs().maxCoeff() <= 1e-12);

  // [T_{z1}, T_{z2}] = 0 exactly on the joint valid block.
  const auto K = commutator(assemble(p, z(2, 0), 5), assemble(p, z(2, 1), 5));
  CHECK(K.raise() == 2);
  CHECK(K.matrix().cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("commutator entry identity") {
  const SpaceParams p(2, 0.0);
  const auto I = identity_operator(p, 6);
  for (const auto& l : enumerate(2, 2))
    for (const auto& m : enumerate(2, 2))
      for (const auto& k : enumerate(2, 2)) CHECK(commutator_entry_identity_check(p, I, l, m, k) <= 1e-14);
  const auto S = assemble(p, z(2, 0), 6);
  CHECK(commutator_entry_identity_check(p, S, mi({1, 0}), mi({0, 0}), mi({0, 0})) <= 1e-12);
  std::mt19937_64 rng(5);
  const auto f = random_combo(rng, 2, 1, 4);
  const auto R = assemble(p, f, 7);
  for (const auto& l : enumerate(2, 2))
    for (const auto& m : enumerate(2, 2))
      for (const auto& k : enumerate(2, 3)) {
        if (m.total() + R.raise() + l.total() > 7 || (k + l).total() > 7) continue;
        CHECK(commutator_entry_identity_check(p, R, l, m, k) <= 1e-12);
      }
}

TEST_CASE("Berezin transform") {
  const SpaceParams p1(1, 0.0);
  const std::vector<complex> half = {{0.5, 0.0}};
  const auto v = berezin(p1, z(1, 0), half);
  CHECK(std::abs(v.value - 0.5) <= 1e-8 + v.tail_bound);
  CHECK(std::abs(berezin(p1, MonomialCombo::constant(1, 1.0), half).value - 1.0) <= 1e-8);
  const std::vector<complex> origin = {{0.0, 0.0}};
  CHECK(std::abs(berezin(p1, z(1, 0) * z(1, 0).conj(), origin).value - 0.5) <= 1e-14);

  // Analytic and anti-analytic symbols are reproduced.
  const SpaceParams p(2, 1.5);
  const auto f = z(2, 0) + z(2, 1) * z(2, 1) * complex(0.0, 2.0) + MonomialCombo::constant(2, -1.0);
  const std::vector<complex> pt = {{0.3, 0.1}, {-0.2, 0.4}};
  const auto b = berezin(p, f, pt);
  CHECK(std::abs(b.value - f(pt)) <= 1e-10);
  CHECK(std::abs(berezin(p, f.conj(), pt).value - std::conj(f(pt))) <= 1e-10);
  CHECK_THROWS_AS(berezin(p, f, std::vector<complex>{{0.8, 0.0}, {0.7, 0.0}}), DomainError);
}

TEST_CASE("operator norms") {
  const SpaceParams p1(1, 0.0);
  CHECK(operator_norm(assemble(p1, MonomialCombo(1), 3)) == 0.0);
  CHECK(operator_norm(identity_operator(SpaceParams(2, 0.0), 3)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(operator_norm(assemble(p1, z(1, 0), 40)) == doctest::Approx(std::sqrt(40.0 / 41.0)).epsilon(1e-13));
}

TEST_CASE("finite-section norms increase and stay below sup|f|") {
  const SpaceParams p1(1, 0.0), p2(2, 0.0);
  const std::vector<std::pair<SpaceParams, MonomialCombo>> cases = {
      {p1, z(1, 0)}, {p1, z(1, 0) * z(1, 0)}, {p2, z(2, 0) * z(2, 1).conj()}};
  for (const auto& [p, f] : cases) {
    double prev = 0.0;
    for (int D = 4; D <= 16; D += 4) {
      const double v = operator_norm(assemble(p, f, D));
      CHECK(v >= prev - 1e-14);
      CHECK(v <= 1.0);
      prev = v;
    }
  }
}
