#include "fec/report.hpp"

#include <stdexcept>

#include "fec/dynkin.hpp"
#include "fec/modular.hpp"

namespace fec {

namespace {

Json invariants_block(const WeightTuple& a) {
  const OrbifoldInvariants inv = invariants(a);
  return Json{{"lcm", to_decimal(inv.lcm)},
              {"mu", inv.mu},
              {"euler", to_decimal(inv.euler)},
              {"class", to_string(classify(a))}};
}

}  // namespace

Json invariants_report(const WeightTuple& a) {
  Json doc{{"tuple", a.str()}};
  doc.update(invariants_block(a));
  return doc;
}

Json census_report(const WeightTuple& a, std::string_view route) {
  Json doc{{"tuple", a.str()}, {"invariants", invariants_block(a)}};
  Json checks = Json::array();
  const OrbifoldClass cls = classify(a);
  if (cls == OrbifoldClass::Domestic) {
    doc["route"] = "closed";
    doc["e_closed"] = to_decimal(domestic_count(a));
  } else if (cls == OrbifoldClass::Tubular) {
    doc["route"] = std::string(route);
    std::optional<Int> closed, recursive;
    if (route == "closed" || route == "both") closed = tubular_count_closed(a);
    if (route == "recursive" || route == "both") recursive = tubular_count_recursive(a);
    if (closed) doc["e_closed"] = to_decimal(*closed);
    if (recursive) doc["e_recursive"] = to_decimal(*recursive);
    doc["fec_mod_gamma"] = to_decimal(fec_mod_gamma(a));
    doc["fec_mod_gamma2"] = to_decimal(fec_mod_gamma2(a));
    if (closed && recursive)
      checks.push_back(Json{{"name", "routes_agree"}, {"pass", *closed == *recursive}});
    // fec_mod_gamma throws on a remainder, so reaching this line proves it.
    checks.push_back(Json{{"name", "quotient_divisibility"}, {"pass", true}});
  } else {
    throw std::domain_error("census: tuple (" + a.str() +
                            ") is wild (euler < 0); no counting formula applies");
  }
  doc["checks"] = std::move(checks);
  return doc;
}

Json tables_report() {
  Json doc;

  Json classification = Json::array();
  for (const char* csv : {"2,2,2,2", "3,3,3", "2,4,4", "2,3,6"}) {
    const WeightTuple a = WeightTuple::parse(csv);
    const OrbifoldInvariants inv = invariants(a);
    classification.push_back(
        Json{{"tuple", a.str()}, {"lcm", to_decimal(inv.lcm)}, {"mu", inv.mu}});
  }
  doc["classification"] = std::move(classification);

  Json congruence = Json::array();
  for (long n : {2L, 3L, 4L, 6L}) {
    congruence.push_back(Json{{"level", n},
                              {"index", to_decimal(index_psl(n))},
                              {"cusps", to_decimal(cusp_count(n).value)}});
  }
  doc["congruence"] = std::move(congruence);

  Json dynkin = Json::array();
  for (int rank = 1; rank <= 10; ++rank) {
    const DynkinDiagram d(DynkinFamily::A, rank);
    dynkin.push_back(Json{{"diagram", d.str()}, {"count", to_decimal(deligne_count(d))}});
  }
  for (int rank = 4; rank <= 10; ++rank) {
    const DynkinDiagram d(DynkinFamily::D, rank);
    dynkin.push_back(Json{{"diagram", d.str()}, {"count", to_decimal(deligne_count(d))}});
  }
  for (int rank = 6; rank <= 8; ++rank) {
    const DynkinDiagram d(DynkinFamily::E, rank);
    dynkin.push_back(Json{{"diagram", d.str()}, {"count", to_decimal(deligne_count(d))}});
  }
  doc["dynkin"] = std::move(dynkin);

  return doc;
}

Json ll_report(EllipticType t) {
  const UnfoldingWeights w = unfolding_weights(t);
  const CorollaryCheck check = corollary_check(t);
  Json weights = Json::array();
  for (const Rat& q : w.weights) weights.push_back(to_decimal(q));
  return Json{{"type", to_string(t)},
              {"tuple", gabrielov_tuple(t).str()},
              {"weights", std::move(weights)},
              {"ll_degree", to_decimal(check.ll)},
              {"fec_mod_gamma2", to_decimal(check.fec_quotient)},
              {"pass", check.pass}};
}

Json modular_report() {
  Json rows = Json::array();
  for (long n : {2L, 3L, 4L, 6L}) {
    const CuspCount cusps = cusp_count(n);
    rows.push_back(Json{{"level", n},
                        {"index", to_decimal(index_psl(n))},
                        {"cusps", to_decimal(cusps.value)},
                        {"verified", cusps.verified}});
  }
  return Json{{"congruence", std::move(rows)}};
}

}  // namespace fec
