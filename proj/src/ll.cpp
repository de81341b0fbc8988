#include "fec/ll.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fec/census.hpp"

namespace fec {

EllipticType parse_elliptic(std::string_view s) {
  std::string norm;
  for (char ch : s) norm += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (norm == "e6~" || norm == "e6tilde" || norm == "e6") return EllipticType::E6Tilde;
  if (norm == "e7~" || norm == "e7tilde" || norm == "e7") return EllipticType::E7Tilde;
  if (norm == "e8~" || norm == "e8tilde" || norm == "e8") return EllipticType::E8Tilde;
  throw std::invalid_argument("elliptic type: expected E6~, E7~ or E8~, got \"" +
                              std::string(s) + "\"");
}

std::string to_string(EllipticType t) {
  switch (t) {
    case EllipticType::E6Tilde: return "E6~";
    case EllipticType::E7Tilde: return "E7~";
    case EllipticType::E8Tilde: return "E8~";
  }
  return "?";
}

namespace {

Rat frac(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Rat> weight_table(EllipticType t) {
  switch (t) {
    case EllipticType::E6Tilde:
      return {1, frac(2, 3), frac(2, 3), frac(2, 3), frac(1, 3), frac(1, 3), frac(1, 3), 0};
    case EllipticType::E7Tilde:
      return {1,          frac(3, 4), frac(3, 4), frac(2, 4), frac(2, 4),
              frac(2, 4), frac(1, 4), frac(1, 4), 0};
    case EllipticType::E8Tilde:
      return {1,          frac(5, 6), frac(4, 6), frac(4, 6), frac(3, 6),
              frac(3, 6), frac(2, 6), frac(2, 6), frac(1, 6), 0};
  }
  throw std::invalid_argument("weight_table: bad type");
}

}  // namespace

WeightTuple gabrielov_tuple(EllipticType t) {
  switch (t) {
    case EllipticType::E6Tilde: return WeightTuple({3, 3, 3});
    case EllipticType::E7Tilde: return WeightTuple({2, 4, 4});
    case EllipticType::E8Tilde: return WeightTuple({2, 3, 6});
  }
  throw std::invalid_argument("gabrielov_tuple: bad type");
}

UnfoldingWeights unfolding_weights(EllipticType t) {
  UnfoldingWeights w{t, weight_table(t)};
  // The table row must line up with the paired tuple: exactly mu entries,
  // opening with weight 1 and closing with weight 0.
  const long mu = invariants(gabrielov_tuple(t)).mu;
  if (static_cast<long>(w.weights.size()) != mu || w.weights.front() != 1 ||
      w.weights.back() != 0)
    throw std::logic_error("unfolding_weights: table row for " + to_string(t) +
                           " does not match its tuple");
  return w;
}

Int ll_degree(const UnfoldingWeights& w) {
  const std::size_t mu = w.weights.size();
  if (mu < 3) throw std::domain_error("ll_degree: need at least three weights");
  Rat inverse_sum(0);
  Rat product(1);
  for (std::size_t j = 1; j + 1 < mu; ++j) {
    const Rat& weight = w.weights[j];
    if (weight == 0) throw std::domain_error("ll_degree: zero interior weight");
    inverse_sum += 1 / weight;
    product *= weight;
  }
  Rat degree(factorial(mu));
  degree *= inverse_sum;
  degree /= 2;
  degree /= product;
  return to_integer(degree, "ll_degree");
}

CorollaryCheck corollary_check(EllipticType t) {
  CorollaryCheck check{t, ll_degree(unfolding_weights(t)), fec_mod_gamma2(gabrielov_tuple(t)),
                       false};
  check.pass = check.ll == check.fec_quotient;
  return check;
}

}  // namespace fec
