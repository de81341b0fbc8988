#pragma once

#include <json.hpp>

#include <string_view>

#include "fec/census.hpp"
#include "fec/ll.hpp"
#include "fec/weights.hpp"

namespace fec {

// Machine-readable reports. Keys keep insertion order and exact counts are
// carried as plain decimal strings, so identical inputs give byte-identical
// documents.
using Json = nlohmann::ordered_json;

Json invariants_report(const WeightTuple& a);

// route is "closed", "recursive" or "both". Tubular tuples get both
// quotient counts and the route-agreement / divisibility check verdicts;
// domestic tuples get the closed-form count only.
Json census_report(const WeightTuple& a, std::string_view route);

// The three reference tables: tubular classification, congruence indices
// and cusps, Dynkin counts.
Json tables_report();

Json ll_report(EllipticType t);

Json modular_report();

}  // namespace fec
