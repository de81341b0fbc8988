#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "fec/weights.hpp"

using namespace fec;

TEST_CASE("invariants of the reference tuples") {
  const auto inv = invariants(WeightTuple::parse("2,3,6"));
  CHECK(inv.lcm == 6);
  CHECK(inv.mu == 10);
  CHECK(inv.euler == 0);

  const auto empty = invariants(WeightTuple{});
  CHECK(empty.lcm == 1);
  CHECK(empty.mu == 2);
  CHECK(empty.euler == 2);

  const auto with_unit = invariants(WeightTuple({2, 2, 2, 1}));
  CHECK(with_unit.lcm == 2);
  CHECK(with_unit.mu == 5);
  CHECK(with_unit.euler == Rat(1, 2));
}

TEST_CASE("classification by the sign of the euler characteristic") {
  CHECK(classify(WeightTuple({2, 2, 2, 2})) == OrbifoldClass::Tubular);
  CHECK(classify(WeightTuple({2, 2, 2})) == OrbifoldClass::Domestic);
  CHECK(classify(WeightTuple({2, 3, 7})) == OrbifoldClass::Wild);
  CHECK(classify(WeightTuple{}) == OrbifoldClass::Domestic);
}

TEST_CASE("subtuple lowers one order and keeps unit entries") {
  CHECK(subtuple(WeightTuple({3, 3, 3}), 0, 2) == WeightTuple({1, 3, 3}));
  CHECK(subtuple(WeightTuple({2, 4, 4}), 1, 1) == WeightTuple({2, 3, 4}));
  CHECK(invariants(subtuple(WeightTuple({3, 3, 3}), 0, 1)).euler == Rat(1, 6));

  CHECK_THROWS_AS(subtuple(WeightTuple({2, 3}), 2, 1), std::out_of_range);
  CHECK_THROWS_AS(subtuple(WeightTuple({2, 3}), 1, 3), std::domain_error);
  CHECK_THROWS_AS(subtuple(WeightTuple({2, 3}), 1, 0), std::domain_error);
  CHECK_THROWS_AS(subtuple(WeightTuple({1, 3}), 0, 1), std::domain_error);  // a_i = 1 has no legal j
}

TEST_CASE("construction validates and canonicalizes") {
  CHECK(WeightTuple({6, 2, 3}).str() == "2,3,6");
  CHECK(WeightTuple({6, 2, 3}) == WeightTuple({3, 6, 2}));
  CHECK(WeightTuple::parse(" 4, 2 ,4 ").str() == "2,4,4");
  CHECK(WeightTuple::parse("").size() == 0);
  CHECK_THROWS_AS(WeightTuple({2, 0, 3}), std::domain_error);
  CHECK_THROWS_AS(WeightTuple::parse("2,,3"), std::invalid_argument);
  CHECK_THROWS_AS(WeightTuple::parse("2;3"), std::invalid_argument);
  CHECK_THROWS_AS(WeightTuple::parse("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(WeightTuple::parse("2,-3"), std::domain_error);
}

TEST_CASE("every reduction of a tubular tuple is domestic") {
  for (const char* csv : {"2,2,2,2", "3,3,3", "2,4,4", "2,3,6"}) {
    const WeightTuple a = WeightTuple::parse(csv);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int j = 1; j <= a[i] - 1; ++j)
        CHECK(classify(subtuple(a, i, j)) == OrbifoldClass::Domestic);
  }
}

TEST_CASE("invariants ignore the input order") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> len(0, 6), order(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> orders(len(rng));
    for (int& a : orders) a = order(rng);
    std::vector<int> shuffled = orders;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto lhs = invariants(WeightTuple(orders));
    const auto rhs = invariants(WeightTuple(shuffled));
    CHECK(lhs.lcm == rhs.lcm);
    CHECK(lhs.mu == rhs.mu);
    CHECK(lhs.euler == rhs.euler);
  }
}

TEST_CASE("euler increment of a reduction is j / (a_i (a_i - j))") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> len(1, 6), order(2, 12);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> orders(len(rng));
    for (int& a : orders) a = order(rng);
    const WeightTuple a(orders);
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    const std::size_t i = pick(rng);
    std::uniform_int_distribution<int> amount(1, a[i] - 1);
    const int j = amount(rng);
    Rat expected(j, a[i] * (a[i] - j));
    expected.canonicalize();
    CHECK(invariants(subtuple(a, i, j)).euler - invariants(a).euler == expected);
  }
}
