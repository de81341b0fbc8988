#include "fec/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace fec {

DynkinDiagram::DynkinDiagram(DynkinFamily f, int r) : family(f), rank(r) {
  switch (family) {
    case DynkinFamily::A:
      if (rank < 0) throw std::domain_error("Dynkin A: rank must be >= 0");
      break;
    case DynkinFamily::D:
      if (rank < 4) throw std::domain_error("Dynkin D: rank must be >= 4");
      break;
    case DynkinFamily::E:
      if (rank < 6 || rank > 8) throw std::domain_error("Dynkin E: rank must be 6, 7 or 8");
      break;
  }
}

DynkinDiagram DynkinDiagram::parse(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("Dynkin diagram: expected e.g. \"A5\", \"D7\", \"E8\"");
  DynkinFamily family;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': family = DynkinFamily::A; break;
    case 'D': family = DynkinFamily::D; break;
    case 'E': family = DynkinFamily::E; break;
    default:
      throw std::invalid_argument("Dynkin diagram: unknown family in \"" + std::string(s) + "\"");
  }
  int rank = 0;
  const auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), rank);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("Dynkin diagram: bad rank in \"" + std::string(s) + "\"");
  return DynkinDiagram(family, rank);
}

std::string DynkinDiagram::str() const {
  const char* fam = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
  return fam + std::to_string(rank);
}

CoxeterData coxeter_data(const DynkinDiagram& d) {
  if (d.rank < 1) throw std::domain_error("coxeter_data: rank must be >= 1");
  CoxeterData data;
  switch (d.family) {
    case DynkinFamily::A:
      for (int k = 2; k <= d.rank + 1; ++k) data.degrees.push_back(k);
      data.coxeter_number = d.rank + 1;
      break;
    case DynkinFamily::D:
      for (int k = 2; k <= 2 * d.rank - 2; k += 2) data.degrees.push_back(k);
      data.degrees.push_back(d.rank);
      std::sort(data.degrees.begin(), data.degrees.end());
      data.coxeter_number = 2 * d.rank - 2;
      break;
    case DynkinFamily::E:
      if (d.rank == 6) data.degrees = {2, 5, 6, 8, 9, 12};
      if (d.rank == 7) data.degrees = {2, 6, 8, 10, 12, 14, 18};
      if (d.rank == 8) data.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
      data.coxeter_number = data.degrees.back();
      break;
  }
  return data;
}

namespace {

// Edges of the diagram, 0-based. The E chain runs 0-2-3-...-(rank-1) with the
// extra node 1 attached to node 3.
std::vector<std::pair<int, int>> edges(const DynkinDiagram& d) {
  std::vector<std::pair<int, int>> e;
  switch (d.family) {
    case DynkinFamily::A:
      for (int i = 0; i + 1 < d.rank; ++i) e.emplace_back(i, i + 1);
      break;
    case DynkinFamily::D:
      for (int i = 0; i + 2 < d.rank; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(d.rank - 3, d.rank - 1);
      break;
    case DynkinFamily::E:
      e.emplace_back(0, 2);
      for (int i = 2; i + 1 < d.rank; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(1, 3);
      break;
  }
  return e;
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(const DynkinDiagram& d) {
  if (d.rank < 1) throw std::domain_error("cartan_matrix: rank must be >= 1");
  std::vector<std::vector<int>> c(d.rank, std::vector<int>(d.rank, 0));
  for (int i = 0; i < d.rank; ++i) c[i][i] = 2;
  for (const auto& [u, v] : edges(d)) {
    c[u][v] = -1;
    c[v][u] = -1;
  }
  return c;
}

Int deligne_count(const DynkinDiagram& d) {
  if (d.rank == 0) return 1;
  const CoxeterData data = coxeter_data(d);
  Rat v(factorial(d.rank) * int_pow(Int(data.coxeter_number), d.rank));
  for (int deg : data.degrees) v /= deg;
  return to_integer(v, "deligne_count");
}

Int catalan_interval_size(const DynkinDiagram& d) {
  const CoxeterData data = coxeter_data(d);
  Rat v(1);
  for (int deg : data.degrees) {
    Rat f(deg + data.coxeter_number, deg);
    f.canonicalize();
    v *= f;
  }
  return to_integer(v, "catalan_interval_size");
}

Int weyl_group_order(const DynkinDiagram& d) {
  const CoxeterData data = coxeter_data(d);
  Int order = 1;
  for (int deg : data.degrees) order *= deg;
  return order;
}

long num_reflections(const DynkinDiagram& d) {
  const CoxeterData data = coxeter_data(d);
  long n = 0;
  for (int deg : data.degrees) n += deg - 1;
  return n;
}

}  // namespace fec
