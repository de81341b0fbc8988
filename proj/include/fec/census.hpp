#pragma once

#include <cstddef>
#include <optional>

#include "fec/weights.hpp"

namespace fec {

// e(A) for euler > 0:  mu! / (a_1! ... a_r! * euler) * prod a_i^{a_i}.
// Orders equal to 1 contribute a factor 1. Throws std::domain_error unless
// the tuple is domestic.
Int domestic_count(const WeightTuple& a);

// e(A) for euler == 0 in closed form:
//   mu!/prod(a_i!) * prod(a_i^{a_i}) * sum(a_i^2 (a_i-1)) / (2 mu) * index/l
// where index = index_psl(lcm) and l = lcm. Throws unless tubular.
Int tubular_count_closed(const WeightTuple& a);

// e(A) for euler == 0 by the cut-and-join recursion
//   e(A) = sum_i sum_{j=1}^{a_i-1} C(mu-1, j-1) e(A_{i,j}) e(A-type, rank j-1)
//          * a_i * index/l,
// with e(A_{i,j}) the domestic closed form of the reduced tuple and the
// A-type factor j^{j-2} (value 1 at j = 1, the empty diagram).
Int tubular_count_recursive(const WeightTuple& a);

// e(A) / index_psl(lcm); divisibility is asserted, a remainder is an
// internal-consistency failure (std::logic_error).
Int fec_mod_gamma(const WeightTuple& a);

// fec_mod_gamma(A) * index_psl(2).
Int fec_mod_gamma2(const WeightTuple& a);

// Per-point collapse identity behind the recursion: for position i,
//   sum_j C(mu-1, j-1) e(A_{i,j}) j^{j-2}
//     == mu!/prod(a_k!) * prod(a_k^{a_k}) * a_i (a_i - 1) / (2 mu).
bool per_point_collapse_identity(const WeightTuple& a, std::size_t i);

enum class CountRoute { DomesticClosedForm, TubularClosedForm, TubularRecursion };
const char* to_string(CountRoute r);

struct CountReport {
  WeightTuple tuple;
  CountRoute route;
  Int e_value;
  std::optional<Int> quotient_mod_gamma;   // tubular only
  std::optional<Int> quotient_mod_gamma2;  // tubular only
};

CountReport count_report(const WeightTuple& a, CountRoute route);

}  // namespace fec
