#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bergcomm/error.hpp"
#include "bergcomm/multiindex.hpp"

using namespace bergcomm;

namespace {
MultiIndex mi(std::vector<int> v) { return MultiIndex(std::move(v)); }
}  // namespace

TEST_CASE("enumerate lists the prefix in graded order") {
  const auto one = enumerate(1, 2);
  REQUIRE(one.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(one[static_cast<std::size_t>(i)] == mi({i}));

  const auto two = enumerate(2, 1);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == mi({0, 0}));
  CHECK(two[1] == mi({1, 0}));
  CHECK(two[2] == mi({0, 1}));

  const auto deg2 = enumerate(2, 2);
  REQUIRE(deg2.size() == 6);
  CHECK(deg2[3] == mi({2, 0}));
  CHECK(deg2[4] == mi({1, 1}));
  CHECK(deg2[5] == mi({0, 2}));
}

TEST_CASE("enumerate has C(n+D, n) distinct entries, sorted by graded_less") {
  for (int n = 1; n <= 4; ++n) {
    for (int D = 0; D <= 6; ++D) {
      const auto all = enumerate(n, D);
      CHECK(all.size() == basis_count(n, D));
      CHECK(std::is_sorted(all.begin(), all.end(), graded_less));
      CHECK(std::set<MultiIndex>(all.begin(), all.end()).size() == all.size());
      for (const auto& m : all) CHECK(m.total() <= D);
    }
  }
  CHECK(basis_count(2, 2) == 6);
  CHECK(basis_count(3, 4) == 35);
}

TEST_CASE("enumerate_degree is the degree-d slice of enumerate") {
  const auto all = enumerate(3, 4);
  for (int d = 0; d <= 4; ++d) {
    std::vector<MultiIndex> slice;
    std::copy_if(all.begin(), all.end(), std::back_inserter(slice), [d](const MultiIndex& m) { return m.total() == d; });
    CHECK(slice == enumerate_degree(3, d));
  }
}

TEST_CASE("dominates is the componentwise order") {
  CHECK(dominates(mi({2, 1}), mi({1, 1})));
  CHECK_FALSE(dominates(mi({2, 0}), mi({1, 1})));
  CHECK(dominates(mi({3}), mi({3})));
  CHECK_THROWS_AS(dominates(mi({1}), mi({1, 0})), DimensionMismatch);
}

TEST_CASE("shift stays in the cone or reports leaving it") {
  CHECK(shift(mi({2, 1}), ShiftIndex({-1, 1})) == mi({1, 2}));
  CHECK_FALSE(shift(mi({0, 0}), ShiftIndex({-1, 0})).has_value());
  CHECK(shift(mi({1}), ShiftIndex({0})) == mi({1}));
}

TEST_CASE("shift parts recombine") {
  const ShiftIndex l({3, -2, 0});
  CHECK(l.positive_part() == mi({3, 0, 0}));
  CHECK(l.negative_part() == mi({0, 2, 0}));
  CHECK(l.abs_part() == mi({3, 2, 0}));
  CHECK(l.sum() == 1);
  CHECK(ShiftIndex::difference(mi({1, 0, 2}), mi({0, 1, 2})).components()[1] == -1);
}

TEST_CASE("indexer positions invert the enumeration") {
  const auto idx = BasisIndexer::make(3, 3);
  const auto& order = idx->order();
  for (std::size_t i = 0; i < order.size(); ++i) CHECK(idx->position(order[i]) == i);
  CHECK_FALSE(idx->position(mi({4, 0, 0})).has_value());
}

TEST_CASE("invalid indices are rejected") {
  CHECK_THROWS_AS(MultiIndex(std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(mi({1, -1}), DomainError);
  CHECK_THROWS_AS(enumerate(0, 2), DomainError);
}
