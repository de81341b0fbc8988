#include "fec/weights.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace fec {

WeightTuple::WeightTuple(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int a : orders_) {
    if (a < 1)
      throw std::domain_error("weight tuple: orders must be >= 1, got " +
                              std::to_string(a));
  }
  std::sort(orders_.begin(), orders_.end());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

WeightTuple WeightTuple::parse(std::string_view csv) {
  csv = trim(csv);
  if (csv.empty()) return WeightTuple{};
  std::vector<int> orders;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    const std::string_view field =
        trim(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
      throw std::invalid_argument("weight tuple: cannot parse \"" + std::string(csv) +
                                  "\" as comma-separated integers");
    orders.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return WeightTuple(std::move(orders));
}

std::string WeightTuple::str() const {
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(orders_[i]);
  }
  return out;
}

OrbifoldInvariants invariants(const WeightTuple& a) {
  OrbifoldInvariants inv;
  inv.lcm = 1;
  inv.mu = 2;
  inv.euler = 2;
  for (int order : a.orders()) {
    mpz_lcm_ui(inv.lcm.get_mpz_t(), inv.lcm.get_mpz_t(), order);
    inv.mu += order - 1;
    Rat term(1, order);
    term.canonicalize();
    inv.euler += term - 1;
  }
  return inv;
}

OrbifoldClass classify(const WeightTuple& a) {
  const Rat chi = invariants(a).euler;
  if (chi > 0) return OrbifoldClass::Domestic;
  if (chi == 0) return OrbifoldClass::Tubular;
  return OrbifoldClass::Wild;
}

const char* to_string(OrbifoldClass c) {
  switch (c) {
    case OrbifoldClass::Domestic: return "domestic";
    case OrbifoldClass::Tubular: return "tubular";
    case OrbifoldClass::Wild: return "wild";
  }
  return "?";
}

WeightTuple subtuple(const WeightTuple& a, std::size_t i, int j) {
  if (i >= a.size())
    throw std::out_of_range("subtuple: index " + std::to_string(i) + " out of range for " +
                            std::to_string(a.size()) + " orders");
  if (j < 1 || j > a[i] - 1)
    throw std::domain_error("subtuple: need 1 <= j <= a_i - 1, got j = " + std::to_string(j) +
                            " with a_i = " + std::to_string(a[i]));
  std::vector<int> orders = a.orders();
  orders[i] -= j;
  return WeightTuple(std::move(orders));
}

}  // namespace fec
