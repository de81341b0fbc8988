#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fec/exact.hpp"
#include "fec/weights.hpp"

namespace fec {

// The three simple elliptic singularity types in Legendre normal form.
enum class EllipticType { E6Tilde, E7Tilde, E8Tilde };

EllipticType parse_elliptic(std::string_view s);  // "E6~", "e7tilde", "E8~"
std::string to_string(EllipticType t);

// Weights of the homogeneous coordinates on the base of the universal
// unfolding. First weight 1, last weight 0, interior weights in (0,1).
struct UnfoldingWeights {
  EllipticType label;
  std::vector<Rat> weights;
};

UnfoldingWeights unfolding_weights(EllipticType t);

// Gabrielov orders paired with each type: (3,3,3), (2,4,4), (2,3,6).
WeightTuple gabrielov_tuple(EllipticType t);

// Algebraic degree of the Lyashko-Looijenga map of the unfolding:
//   mu! * (1/2 sum_{j=2}^{mu-1} 1/w_j) / prod_{j=2}^{mu-1} w_j
// (the two extreme coordinates are excluded; a zero interior weight is a
// domain error).
Int ll_degree(const UnfoldingWeights& w);

struct CorollaryCheck {
  EllipticType label;
  Int ll;            // degree from the weight table
  Int fec_quotient;  // fec_mod_gamma2 of the paired tuple
  bool pass;
};

// Cross-check: the LL degree must equal the exceptional-collection count of
// the paired tuple modulo the level-2 congruence action.
CorollaryCheck corollary_check(EllipticType t);

}  // namespace fec
