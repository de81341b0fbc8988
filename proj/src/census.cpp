#include "fec/census.hpp"

#include <stdexcept>

#include "fec/dynkin.hpp"
#include "fec/modular.hpp"

namespace fec {

namespace {

// mu! / prod(a_i!) * prod(a_i^{a_i}); the common front factor of every
// counting formula here.
Rat multinomial_power_factor(const WeightTuple& a, long mu) {
  Rat v(factorial(mu));
  for (int order : a.orders()) {
    v /= factorial(order);
    v *= int_pow(Int(order), order);
  }
  return v;
}

void require_class(const WeightTuple& a, OrbifoldClass wanted, const char* who) {
  if (classify(a) != wanted)
    throw std::domain_error(std::string(who) + ": tuple (" + a.str() + ") is " +
                            to_string(classify(a)) + ", needs " + to_string(wanted));
}

Rat cusp_factor(const OrbifoldInvariants& inv) {
  const long level = inv.lcm.get_si();
  Rat f(index_psl(level));
  f /= level;
  return f;
}

}  // namespace

Int domestic_count(const WeightTuple& a) {
  require_class(a, OrbifoldClass::Domestic, "domestic_count");
  const OrbifoldInvariants inv = invariants(a);
  Rat v = multinomial_power_factor(a, inv.mu);
  v /= inv.euler;
  return to_integer(v, "domestic_count");
}

Int tubular_count_closed(const WeightTuple& a) {
  require_class(a, OrbifoldClass::Tubular, "tubular_count_closed");
  const OrbifoldInvariants inv = invariants(a);
  Int weighted_sum = 0;
  for (int order : a.orders()) weighted_sum += Int(order) * order * (order - 1);
  Rat v = multinomial_power_factor(a, inv.mu);
  v *= weighted_sum;
  v /= 2 * inv.mu;
  v *= cusp_factor(inv);
  return to_integer(v, "tubular_count_closed");
}

Int tubular_count_recursive(const WeightTuple& a) {
  require_class(a, OrbifoldClass::Tubular, "tubular_count_recursive");
  const OrbifoldInvariants inv = invariants(a);
  const Rat cusps = cusp_factor(inv);
  Rat total(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int j = 1; j <= a[i] - 1; ++j) {
      // The rank-(j-1) A-type factor is j^{j-2}, with the empty diagram
      // contributing 1 at j = 1.
      Rat term(binomial(inv.mu - 1, j - 1) * domestic_count(subtuple(a, i, j)) *
               deligne_count(DynkinDiagram(DynkinFamily::A, j - 1)) * a[i]);
      total += term * cusps;
    }
  }
  return to_integer(total, "tubular_count_recursive");
}

Int fec_mod_gamma(const WeightTuple& a) {
  const Int e = tubular_count_closed(a);
  const Int index = index_psl(invariants(a).lcm.get_si());
  Int quotient, rem;
  mpz_fdiv_qr(quotient.get_mpz_t(), rem.get_mpz_t(), e.get_mpz_t(), index.get_mpz_t());
  if (rem != 0)
    throw std::logic_error("fec_mod_gamma: count for (" + a.str() +
                           ") is not divisible by the congruence index");
  return quotient;
}

Int fec_mod_gamma2(const WeightTuple& a) { return fec_mod_gamma(a) * index_psl(2); }

bool per_point_collapse_identity(const WeightTuple& a, std::size_t i) {
  require_class(a, OrbifoldClass::Tubular, "per_point_collapse_identity");
  if (i >= a.size()) throw std::out_of_range("per_point_collapse_identity: bad point index");
  const OrbifoldInvariants inv = invariants(a);
  Rat lhs(0);
  for (int j = 1; j <= a[i] - 1; ++j) {
    lhs += Rat(binomial(inv.mu - 1, j - 1) * domestic_count(subtuple(a, i, j)) *
               deligne_count(DynkinDiagram(DynkinFamily::A, j - 1)));
  }
  Rat point_factor(Int(a[i]) * (a[i] - 1), Int(2 * inv.mu));
  point_factor.canonicalize();
  const Rat rhs = multinomial_power_factor(a, inv.mu) * point_factor;
  return lhs == rhs;
}

const char* to_string(CountRoute r) {
  switch (r) {
    case CountRoute::DomesticClosedForm: return "domestic-closed-form";
    case CountRoute::TubularClosedForm: return "tubular-closed-form";
    case CountRoute::TubularRecursion: return "tubular-recursion";
  }
  return "?";
}

CountReport count_report(const WeightTuple& a, CountRoute route) {
  CountReport report{a, route, Int(0), std::nullopt, std::nullopt};
  switch (route) {
    case CountRoute::DomesticClosedForm:
      report.e_value = domestic_count(a);
      return report;
    case CountRoute::TubularClosedForm:
      report.e_value = tubular_count_closed(a);
      break;
    case CountRoute::TubularRecursion:
      report.e_value = tubular_count_recursive(a);
      break;
  }
  report.quotient_mod_gamma = fec_mod_gamma(a);
  report.quotient_mod_gamma2 = fec_mod_gamma2(a);
  return report;
}

}  // namespace fec
