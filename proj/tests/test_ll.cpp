#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fec/census.hpp"
#include "fec/ll.hpp"

using namespace fec;

namespace {
const EllipticType kAll[] = {EllipticType::E6Tilde, EllipticType::E7Tilde,
                             EllipticType::E8Tilde};
}

TEST_CASE("degrees from the weight tables") {
  CHECK(ll_degree(unfolding_weights(EllipticType::E6Tilde)) == 24800580);
  CHECK(ll_degree(unfolding_weights(EllipticType::E7Tilde)) == 688128000);
  CHECK(ll_degree(unfolding_weights(EllipticType::E8Tilde)) == Int("21374793216"));
}

TEST_CASE("degree equals the level-2 quotient count of the paired tuple") {
  for (EllipticType t : kAll) {
    const CorollaryCheck check = corollary_check(t);
    CHECK(check.pass);
    CHECK(check.ll == fec_mod_gamma2(gabrielov_tuple(t)));
  }
}

TEST_CASE("weight tables line up with their tuples") {
  for (EllipticType t : kAll) {
    const UnfoldingWeights w = unfolding_weights(t);
    CHECK(static_cast<long>(w.weights.size()) == invariants(gabrielov_tuple(t)).mu);
    CHECK(w.weights.front() == 1);
    CHECK(w.weights.back() == 0);
    for (std::size_t j = 1; j + 1 < w.weights.size(); ++j) {
      CHECK(w.weights[j] > 0);
      CHECK(w.weights[j] < 1);
    }
  }
}

TEST_CASE("degree is symmetric in the interior weights") {
  std::mt19937 rng(5150);
  for (EllipticType t : kAll) {
    UnfoldingWeights w = unfolding_weights(t);
    const Int reference = ll_degree(w);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(w.weights.begin() + 1, w.weights.end() - 1, rng);
      CHECK(ll_degree(w) == reference);
    }
  }
}

TEST_CASE("zero interior weight is rejected") {
  UnfoldingWeights w = unfolding_weights(EllipticType::E6Tilde);
  w.weights[3] = 0;
  CHECK_THROWS_AS(ll_degree(w), std::domain_error);
}

TEST_CASE("label parsing") {
  CHECK(parse_elliptic("E6~") == EllipticType::E6Tilde);
  CHECK(parse_elliptic("e7tilde") == EllipticType::E7Tilde);
  CHECK(parse_elliptic("E8") == EllipticType::E8Tilde);
  CHECK(to_string(EllipticType::E7Tilde) == "E7~");
  CHECK_THROWS_AS(parse_elliptic("E5~"), std::invalid_argument);
}
