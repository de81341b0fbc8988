#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fec/exact.hpp"

namespace fec {

// Tuple A = (a_1,...,a_r) of orbifold-point orders on a projective line.
// Stored in canonical ascending order; equality is equality of canonical
// forms. Orders equal to 1 are legal and counting-neutral (they show up as
// reduced tuples inside the recursion); r = 0 is the plain projective line.
class WeightTuple {
 public:
  WeightTuple() = default;
  explicit WeightTuple(std::vector<int> orders);

  // Comma-separated decimal integers, e.g. "2,3,6". "" is the empty tuple.
  static WeightTuple parse(std::string_view csv);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t size() const { return orders_.size(); }
  int operator[](std::size_t i) const { return orders_[i]; }
  bool operator==(const WeightTuple&) const = default;

  // Canonical csv form, re-sorted ascending.
  std::string str() const;

 private:
  std::vector<int> orders_;
};

struct OrbifoldInvariants {
  Int lcm;    // lcm(a_1,...,a_r); 1 for the empty tuple
  long mu;    // 2 + sum(a_i - 1)
  Rat euler;  // 2 + sum(1/a_i - 1)
};

enum class OrbifoldClass { Domestic, Tubular, Wild };

OrbifoldInvariants invariants(const WeightTuple& a);

// Domestic iff euler > 0, Tubular iff euler == 0, Wild iff euler < 0.
OrbifoldClass classify(const WeightTuple& a);
const char* to_string(OrbifoldClass c);

// A with the i-th order (0-based position in canonical form) lowered by j.
// Requires 1 <= j <= a_i - 1; an order that drops to 1 is kept, not deleted.
WeightTuple subtuple(const WeightTuple& a, std::size_t i, int j);

}  // namespace fec
