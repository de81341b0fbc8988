#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "fec/weyl.hpp"

using namespace fec;

namespace {

DynkinDiagram A(int r) { return DynkinDiagram(DynkinFamily::A, r); }
DynkinDiagram D(int r) { return DynkinDiagram(DynkinFamily::D, r); }
DynkinDiagram E(int r) { return DynkinDiagram(DynkinFamily::E, r); }

// Independent oracle: walk every ordered tuple of reflections of full
// length and count the ones multiplying to the Coxeter element. Exponential
// in the rank, for tiny diagrams only.
Int brute_force_factorizations(const DynkinDiagram& d) {
  const auto refl = all_reflections(d);
  const WeylElement c = coxeter_element(d);
  Int count = 0;
  std::vector<std::size_t> pick(d.rank, 0);
  while (true) {
    WeylElement w(d.rank);
    for (std::size_t idx : pick) w = w * refl[idx];
    if (w == c) ++count;
    int pos = d.rank - 1;
    while (pos >= 0 && ++pick[pos] == refl.size()) pick[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

std::vector<int> shuffled_order(int rank, std::mt19937& rng) {
  std::vector<int> order(rank);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace

TEST_CASE("simple reflections are involutions of absolute length one") {
  for (const auto& d : {A(1), A(4), D(4), E(6)}) {
    for (const WeylElement& s : simple_reflections(d)) {
      CHECK((s * s).is_identity());
      CHECK(s.absolute_length() == 1);
    }
  }
}

TEST_CASE("reflection closure has one element per positive root") {
  for (const auto& d : {A(2), A(5), D(4), D(6), E(6), E(7), E(8)}) {
    const auto refl = all_reflections(d);
    CHECK(static_cast<long>(refl.size()) == num_reflections(d));
    for (const WeylElement& t : refl) CHECK(t.absolute_length() == 1);
  }
}

TEST_CASE("coxeter element has full reflection length") {
  for (const auto& d : {A(1), A(6), D(5), E(6), E(7)})
    CHECK(coxeter_element(d).absolute_length() == d.rank);
}

TEST_CASE("group closure matches the degree product for small ranks") {
  for (const auto& d : {A(1), A(2), A(3), A(4), D(4)})
    CHECK(weyl_group_order_by_closure(d) == weyl_group_order(d));
}

TEST_CASE("exhaustive tuple enumeration confirms the DP on tiny diagrams") {
  CHECK(brute_force_factorizations(A(2)) == 3);
  for (const auto& d : {A(1), A(2), A(3), A(4), D(4)}) {
    const Int expected = brute_force_factorizations(d);
    CHECK(count_reflection_factorizations_serial(d).count == expected);
    CHECK(count_reflection_factorizations_parallel(d).count == expected);
  }
}

TEST_CASE("serial and parallel DP agree and match the closed form") {
  for (const auto& d : {A(1), A(2), A(3), A(4), A(5), A(6), D(4), D(5), D(6), E(6)}) {
    const auto serial = count_reflection_factorizations_serial(d);
    const auto parallel = count_reflection_factorizations_parallel(d);
    CHECK(serial.count == deligne_count(d));
    CHECK(parallel.count == serial.count);
    CHECK(serial.interval_size == catalan_interval_size(d));
    CHECK(parallel.interval_size == serial.interval_size);
  }
}

TEST_CASE("the count does not depend on the simple-reflection order") {
  std::mt19937 rng(424242);
  for (const auto& d : {A(4), A(5), D(4), D(5), E(6)}) {
    const Int reference = count_reflection_factorizations_parallel(d).count;
    for (int trial = 0; trial < 3; ++trial) {
      const auto order = shuffled_order(d.rank, rng);
      CHECK(count_reflection_factorizations_parallel(d, order).count == reference);
    }
  }
}

TEST_CASE("coxeter element rejects malformed orders") {
  const std::vector<int> dup{0, 0, 1};
  const std::vector<int> low{0, 1};
  CHECK_THROWS_AS(coxeter_element(A(3), dup), std::invalid_argument);
  CHECK_THROWS_AS(coxeter_element(A(3), low), std::invalid_argument);
}
