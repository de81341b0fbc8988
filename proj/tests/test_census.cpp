#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "fec/census.hpp"
#include "fec/modular.hpp"

using namespace fec;

namespace {

const std::vector<WeightTuple>& tubular_tuples() {
  static const std::vector<WeightTuple> tuples{
      WeightTuple({2, 2, 2, 2}), WeightTuple({3, 3, 3}), WeightTuple({2, 4, 4}),
      WeightTuple({2, 3, 6})};
  return tuples;
}

}  // namespace

TEST_CASE("domestic closed form") {
  CHECK(domestic_count(WeightTuple{}) == 1);
  CHECK(domestic_count(WeightTuple({2, 2, 2, 1})) == 1920);
  CHECK(domestic_count(WeightTuple({2, 2, 2})) == 1920);
  CHECK_THROWS_AS(domestic_count(WeightTuple({2, 2, 2, 2})), std::domain_error);
  CHECK_THROWS_AS(domestic_count(WeightTuple({2, 3, 7})), std::domain_error);
}

TEST_CASE("tubular closed form") {
  CHECK(tubular_count_closed(WeightTuple({2, 2, 2, 2})) == 46080);
  CHECK(tubular_count_closed(WeightTuple({3, 3, 3})) == 49601160);
  CHECK(tubular_count_closed(WeightTuple({2, 4, 4})) == 2752512000);
  CHECK(tubular_count_closed(WeightTuple({2, 3, 6})) == Int("256497518592"));
  CHECK_THROWS_AS(tubular_count_closed(WeightTuple({2, 2, 2})), std::domain_error);
}

TEST_CASE("recursion reproduces the closed form") {
  CHECK(tubular_count_recursive(WeightTuple({2, 2, 2, 2})) == 46080);
  for (const WeightTuple& a : tubular_tuples())
    CHECK(tubular_count_recursive(a) == tubular_count_closed(a));
}

TEST_CASE("quotient counts") {
  CHECK(fec_mod_gamma(WeightTuple({2, 2, 2, 2})) == 7680);
  CHECK(fec_mod_gamma(WeightTuple({3, 3, 3})) == 4133430);
  CHECK(fec_mod_gamma(WeightTuple({2, 3, 6})) == 3562465536);
  CHECK(fec_mod_gamma2(WeightTuple({3, 3, 3})) == 24800580);
  CHECK(fec_mod_gamma2(WeightTuple({2, 4, 4})) == 688128000);
  CHECK(fec_mod_gamma2(WeightTuple({2, 3, 6})) == Int("21374793216"));
}

TEST_CASE("counts divide exactly by the congruence index") {
  for (const WeightTuple& a : tubular_tuples()) {
    const long level = invariants(a).lcm.get_si();
    CHECK(tubular_count_closed(a) % index_psl(level) == 0);
  }
}

TEST_CASE("per-point collapse identity at every orbifold point") {
  for (const WeightTuple& a : tubular_tuples())
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(per_point_collapse_identity(a, i));
}

TEST_CASE("an order-1 point never changes the domestic count") {
  std::mt19937 rng(90210);
  std::uniform_int_distribution<int> len(0, 4), order(1, 6);
  int produced = 0;
  while (produced < 20) {
    std::vector<int> orders(len(rng));
    for (int& a : orders) a = order(rng);
    WeightTuple a(orders);
    if (classify(a) != OrbifoldClass::Domestic) continue;
    ++produced;
    orders.push_back(1);
    CHECK(domestic_count(WeightTuple(orders)) == domestic_count(a));
  }
}

TEST_CASE("count reports carry the route and the quotients") {
  const auto domestic = count_report(WeightTuple({2, 2, 2}), CountRoute::DomesticClosedForm);
  CHECK(domestic.e_value == 1920);
  CHECK_FALSE(domestic.quotient_mod_gamma.has_value());

  const auto tubular = count_report(WeightTuple({3, 3, 3}), CountRoute::TubularRecursion);
  CHECK(tubular.e_value == 49601160);
  CHECK(tubular.quotient_mod_gamma.value() == 4133430);
  CHECK(tubular.quotient_mod_gamma2.value() == 24800580);

  CHECK_THROWS_AS(count_report(WeightTuple({2, 2, 2}), CountRoute::TubularClosedForm),
                  std::domain_error);
}
