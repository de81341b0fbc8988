#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fec/exact.hpp"

namespace fec {

enum class DynkinFamily { A, D, E };

// Simply laced Dynkin diagram. Rank bounds: A with rank >= 0 (A0 is the
// empty diagram), D with rank >= 4, E with rank 6, 7 or 8.
struct DynkinDiagram {
  DynkinFamily family;
  int rank;

  DynkinDiagram(DynkinFamily f, int r);
  // "A5", "d7", "E8"; case-insensitive. "A0" is accepted.
  static DynkinDiagram parse(std::string_view s);
  std::string str() const;
  bool operator==(const DynkinDiagram&) const = default;
};

struct CoxeterData {
  std::vector<int> degrees;  // ascending; degrees.back() == coxeter_number
  int coxeter_number;
};

// Invariant degrees of the Weyl group and the Coxeter number h. Rank >= 1.
CoxeterData coxeter_data(const DynkinDiagram& d);

// Symmetric Cartan matrix (2 on the diagonal, -1 across each edge).
std::vector<std::vector<int>> cartan_matrix(const DynkinDiagram& d);

// mu! * h^mu / (d_1 ... d_mu), the count of full exceptional collections of
// the path algebra modulo translations. A0 yields 1.
Int deligne_count(const DynkinDiagram& d);

// prod (d_i + h)/d_i: the number of elements weakly below a Coxeter element
// in absolute order (equivalently, noncrossing partitions of that type).
Int catalan_interval_size(const DynkinDiagram& d);

// prod d_i = |W|.
Int weyl_group_order(const DynkinDiagram& d);

// sum (d_i - 1): positive roots, i.e. reflections.
long num_reflections(const DynkinDiagram& d);

}  // namespace fec
