#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "fec/dynkin.hpp"
#include "fec/exact.hpp"

namespace fec {

// Weyl group element as an exact integer matrix acting on the root lattice
// in the simple-root basis. Columns of the matrix are root coordinate
// vectors, so entries stay small (at most the highest-root coefficients).
class WeylElement {
 public:
  explicit WeylElement(int rank);  // identity

  int rank() const { return rank_; }
  std::int64_t at(int row, int col) const { return m_[row * rank_ + col]; }
  std::int64_t& at(int row, int col) { return m_[row * rank_ + col]; }

  WeylElement operator*(const WeylElement& rhs) const;
  bool operator==(const WeylElement&) const = default;
  auto operator<=>(const WeylElement&) const = default;

  bool is_identity() const;

  // Reflection length: rank over Q of (w - id), computed by fraction-free
  // elimination in 64-bit integers.
  int absolute_length() const;

  std::size_t hash() const;

 private:
  int rank_;
  std::vector<std::int64_t> m_;  // row-major
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

// Reflections along the simple roots, from the Cartan matrix of d.
std::vector<WeylElement> simple_reflections(const DynkinDiagram& d);

// Closure of the simple reflections under conjugation; size equals
// num_reflections(d). Returned sorted for deterministic iteration.
std::vector<WeylElement> all_reflections(const DynkinDiagram& d);

// Product of the simple reflections in the given index order (0-based
// permutation of 0..rank-1); empty means natural order 0,1,...,rank-1.
WeylElement coxeter_element(const DynkinDiagram& d, std::span<const int> order = {});

struct FactorizationCount {
  Int count;           // ordered reduced reflection factorizations of c
  long interval_size;  // distinct elements visited = |[e, c]| in absolute order
};

// Number of tuples (t_1,...,t_mu) of reflections with t_1...t_mu = c and the
// absolute length dropping by one at each step. Serial route: top-down
// recursion from c with a memo table keyed on the element.
FactorizationCount count_reflection_factorizations_serial(
    const DynkinDiagram& d, std::span<const int> order = {});

// OpenMP route: the interval [e, c] is built level by level going down from
// c, then counts are swept upward one level at a time with a parallel loop
// over the elements of the level. Result is identical to the serial route
// for every thread schedule.
FactorizationCount count_reflection_factorizations_parallel(
    const DynkinDiagram& d, std::span<const int> order = {});

// Default entry point (the OpenMP route).
Int count_reflection_factorizations(const DynkinDiagram& d);

// |<s_1,...,s_mu>| by plain closure; intended for small ranks where the
// group order fits an enumeration (it must equal prod d_i).
Int weyl_group_order_by_closure(const DynkinDiagram& d);

}  // namespace fec
