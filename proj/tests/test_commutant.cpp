#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bergcomm/commutant.hpp"
#include "bergcomm/error.hpp"
#include "bergcomm/symbols.hpp"
#include "bergcomm/toeplitz.hpp"

using namespace bergcomm;

namespace {
MultiIndex mi(std::vector<int> v) { return MultiIndex(std::move(v)); }
MonomialCombo z(int n, int j) { return MonomialCombo::coordinate(n, j); }
}  // namespace

TEST_CASE("analytic test") {
  const SpaceParams p(2, 0.0);
  CHECK(analytic_test(assemble(p, z(2, 0) * z(2, 0) + z(2, 1) * 3.0, 5), 1e-10).pass);
  CHECK(analytic_test(identity_operator(p, 4), 1e-10).pass);

  const auto bad = analytic_test(assemble(p, z(2, 0).conj(), 4), 1e-10);
  CHECK_FALSE(bad.pass);
  const double expect = norm_constant(p, mi({1, 0})) * ball_monomial_integral(p, mi({1, 0}));
  CHECK(std::abs(assemble(p, z(2, 0).conj(), 4).entry(mi({0, 0}), mi({1, 0}))) == doctest::Approx(expect).epsilon(1e-13));
  CHECK(bad.lower_triangle_max >= expect);
  REQUIRE(bad.lower_witness.has_value());

  // Upper-triangular but not Toeplitz: one entry perturbed.
  const auto S = assemble(p, z(2, 0), 4);
  const auto off = S.with_entry(mi({2, 0}), mi({1, 0}), S.entry(mi({2, 0}), mi({1, 0})) + 1e-3);
  const auto rep = analytic_test(off, 1e-10);
  CHECK_FALSE(rep.pass);
  CHECK(rep.lower_triangle_max == 0.0);
  CHECK(rep.diagonal_spread > 1e-4);
}

TEST_CASE("symbol extraction") {
  const SpaceParams p1(1, 0.0);
  const auto f = extract_symbol(assemble(p1, z(1, 0) * z(1, 0), 4));
  REQUIRE(f.terms().size() == 1);
  CHECK(f.terms()[0].a == mi({2}));
  CHECK(std::abs(f.terms()[0].c - 1.0) <= 1e-12);

  const auto one = extract_symbol(identity_operator(SpaceParams(2, 0.5), 3));
  CHECK(one == MonomialCombo::constant(2, 1.0));

  const SpaceParams p2(2, 0.0);
  const auto g = z(2, 0) * 2.0 - z(2, 1);
  const auto S = assemble(p2, g, 5);
  const auto h = extract_symbol(S);
  REQUIRE(h.terms().size() == 2);
  CHECK(std::abs(h.terms()[0].c - g.terms()[0].c) <= 1e-10);
  CHECK(std::abs(h.terms()[1].c - g.terms()[1].c) <= 1e-10);
  CHECK(roundtrip_residual(S, h) <= 1e-12);
  CHECK_THROWS_AS(extract_symbol(assemble(p2, z(2, 0).conj(), 3)), DomainError);
}

TEST_CASE("shift relation") {
  const SpaceParams p(2, 0.0);
  CHECK(lemma4_check(assemble(p, z(2, 0), 6), mi({0, 1})).residual <= 1e-12);
  for (const auto& l : enumerate(2, 2)) {
    if (l.is_zero()) continue;
    CHECK(lemma4_check(identity_operator(p, 5), l).residual == 0.0);
  }
  const auto bad = lemma4_check(prop4_operator(p, 6), mi({0, 1}));
  CHECK(bad.residual > 0.1);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->m == mi({0, 0}));
}

TEST_CASE("the compact operator commutes with T_{z_1} but not T_{z_2}") {
  const SpaceParams p(2, 0.0);
  const auto S = prop4_operator(p, 6);
  CHECK(S.entry(mi({0, 1}), mi({0, 0})).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(S.entry(mi({1, 1}), mi({1, 0})).real() == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
  for (const auto& k : enumerate(2, 6)) CHECK(S.entry(k, mi({0, 1})) == complex(0.0));

  CHECK(commutator(S, assemble(p, z(2, 0), 6)).matrix().cwiseAbs().maxCoeff() <= 1e-12);
  const auto K = commutator(S, assemble(p, MonomialCombo::basis_element(p, mi({0, 1})), 6));
  CHECK(std::abs(K.entry(mi({0, 2}), mi({0, 0}))) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-13));
  CHECK(commutator_entry_identity_check(p, S, mi({0, 1}), mi({0, 0}), mi({0, 0})) <= 1e-12);
  CHECK_THROWS_AS(prop4_operator(SpaceParams(1, 0.0), 3), DomainError);
}

TEST_CASE("shift classification") {
  const SeparatelyRadialSymbol g({1, 0}, RadialProfile::constant(1.0));
  CHECK(prop2_classify(g, ShiftIndex({0, 0})).expect_equal);
  CHECK_FALSE(prop2_classify(g, ShiftIndex({1, -1})).expect_equal);
  const auto radial = SeparatelyRadialSymbol::radial(2, RadialProfile::power(2.0));
  CHECK(prop2_classify(radial, ShiftIndex({1, -1})).expect_equal);
  CHECK_FALSE(prop2_classify(radial, ShiftIndex({1, 0})).expect_equal);
}

TEST_CASE("classification matches omega differences") {
  const SpaceParams p(3, 0.4);
  const std::vector<SeparatelyRadialSymbol> gs = {
      SeparatelyRadialSymbol({1, 0, 0}, RadialProfile::constant(1.0)),
      SeparatelyRadialSymbol({0, 2, 0.5}, RadialProfile::power(1.0)),
      SeparatelyRadialSymbol::radial(3, RadialProfile::even_poly({0.0, 1.0, 1.0})),
  };
  for (const auto& g : gs) {
    for (const auto& a : enumerate(3, 2)) {
      for (const auto& b : enumerate(3, 2)) {
        const auto l = ShiftIndex::difference(a, b);
        const bool equal = prop2_classify(g, l).expect_equal;
        double gap = 0.0;
        for (const auto& m : enumerate(3, 6)) {
          if (const auto ml = shift(m, l)) gap = std::max(gap, std::abs(omega(p, g, *ml) - omega(p, g, m)));
        }
        if (equal) {
          CHECK(gap <= 1e-12);
        } else {
          CHECK(gap > 1e-3);
        }
      }
    }
  }
}

TEST_CASE("commutation residual and predicate") {
  const SpaceParams p(2, 0.0);
  const auto f = z(2, 0) * z(2, 1).conj();
  const auto radial = SeparatelyRadialSymbol::radial(2, RadialProfile::power(2.0));
  CHECK(theorem2_residual(p, f, radial, 8).residual <= 1e-12);

  const SeparatelyRadialSymbol s10({1, 0}, RadialProfile::constant(1.0));
  const auto rep = theorem2_residual(p, f, s10, 8);
  CHECK(rep.residual > 1e-4);

  const auto abs1 = z(2, 0) * z(2, 0).conj();
  CHECK(theorem2_residual(p, abs1, s10, 6).residual == 0.0);

  const auto a = theorem2_equivalence(p, f, radial, 8, 1e-12);
  CHECK(a.residual_pass);
  CHECK(a.predicate_pass);
  const auto b = theorem2_equivalence(p, z(2, 0), radial, 8, 1e-12);
  CHECK_FALSE(b.residual_pass);
  CHECK_FALSE(b.predicate_pass);
  const auto c = theorem2_equivalence(p, abs1 * z(2, 1) * z(2, 1).conj(),
                                      SeparatelyRadialSymbol({1, 1}, RadialProfile::constant(1.0)), 8, 1e-12);
  CHECK(c.residual_pass);
  CHECK(c.predicate_pass);
  CHECK_THROWS_AS(theorem2_equivalence(p, f, SeparatelyRadialSymbol::radial(2, RadialProfile::constant(2.0)), 4, 1e-12),
                  DomainError);
}
