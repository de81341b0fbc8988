#include "fec/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace fec {

WeylElement::WeylElement(int rank) : rank_(rank), m_(rank * rank, 0) {
  for (int i = 0; i < rank; ++i) at(i, i) = 1;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  assert(rank_ == rhs.rank_);
  WeylElement out(rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < rank_; ++k) acc += at(i, k) * rhs.at(k, j);
      out.at(i, j) = acc;
    }
  }
  return out;
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

// Fraction-free Gaussian elimination (Bareiss) with full pivoting. Work
// entries are k-minors of (w - id); with |entries| <= 7 and rank <= 8 the
// Hadamard bound keeps every intermediate product inside __int128.
int WeylElement::absolute_length() const {
  const int n = rank_;
  std::vector<std::int64_t> a(m_);
  for (int i = 0; i < n; ++i) a[i * n + i] -= 1;

  auto entry = [&](int r, int c) -> std::int64_t& { return a[r * n + c]; };
  std::int64_t prev = 1;
  int pivots = 0;
  for (int step = 0; step < n; ++step) {
    int pr = -1, pc = -1;
    for (int r = step; r < n && pr < 0; ++r)
      for (int c = step; c < n; ++c)
        if (entry(r, c) != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;  // remaining block is zero
    if (pr != step)
      for (int c = 0; c < n; ++c) std::swap(entry(step, c), entry(pr, c));
    if (pc != step)
      for (int r = 0; r < n; ++r) std::swap(entry(r, step), entry(r, pc));
    ++pivots;
    const std::int64_t piv = entry(step, step);
    for (int r = step + 1; r < n; ++r) {
      for (int c = step + 1; c < n; ++c) {
        const __int128 num = static_cast<__int128>(piv) * entry(r, c) -
                             static_cast<__int128>(entry(r, step)) * entry(step, c);
        entry(r, c) = static_cast<std::int64_t>(num / prev);
      }
      entry(r, step) = 0;
    }
    prev = piv;
  }
  return pivots;
}

std::size_t WeylElement::hash() const {
  // FNV-1a over the entries; they are tiny, one byte each is plenty.
  std::size_t h = 1469598103934665603ull;
  for (std::int64_t v : m_) {
    h ^= static_cast<std::size_t>(v) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<WeylElement> simple_reflections(const DynkinDiagram& d) {
  if (d.rank < 1) throw std::domain_error("simple_reflections: rank must be >= 1");
  const auto cartan = cartan_matrix(d);
  std::vector<WeylElement> refl;
  refl.reserve(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    // s_i(alpha_j) = alpha_j - C[i][j] alpha_i
    WeylElement s(d.rank);
    for (int j = 0; j < d.rank; ++j) s.at(i, j) -= cartan[i][j];
    refl.push_back(std::move(s));
  }
  return refl;
}

std::vector<WeylElement> all_reflections(const DynkinDiagram& d) {
  const auto simple = simple_reflections(d);
  std::unordered_set<WeylElement, WeylElementHash> seen(simple.begin(), simple.end());
  std::vector<WeylElement> queue(simple.begin(), simple.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const WeylElement current = queue[head];
    for (const WeylElement& s : simple) {
      WeylElement conj = s * current * s;
      if (seen.insert(conj).second) queue.push_back(std::move(conj));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

WeylElement coxeter_element(const DynkinDiagram& d, std::span<const int> order) {
  const auto simple = simple_reflections(d);
  std::vector<int> natural;
  if (order.empty()) {
    natural.resize(d.rank);
    std::iota(natural.begin(), natural.end(), 0);
    order = natural;
  }
  if (static_cast<int>(order.size()) != d.rank)
    throw std::invalid_argument("coxeter_element: order must list every simple index once");
  std::vector<bool> used(d.rank, false);
  WeylElement c(d.rank);
  for (int idx : order) {
    if (idx < 0 || idx >= d.rank || used[idx])
      throw std::invalid_argument("coxeter_element: order must list every simple index once");
    used[idx] = true;
    c = c * simple[idx];
  }
  return c;
}

namespace {

using Memo = std::unordered_map<WeylElement, Int, WeylElementHash>;

// Reduced factorizations of w, choosing the last reflection first:
// every t with l(wt) = l(w) - 1 contributes the count of wt.
Int count_below(const WeylElement& w, int length, const std::vector<WeylElement>& refl,
                Memo& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  Int total = 0;
  for (const WeylElement& t : refl) {
    WeylElement wt = w * t;
    if (wt.absolute_length() == length - 1) total += count_below(wt, length - 1, refl, memo);
  }
  memo.emplace(w, total);
  return total;
}

}  // namespace

FactorizationCount count_reflection_factorizations_serial(const DynkinDiagram& d,
                                                          std::span<const int> order) {
  const auto refl = all_reflections(d);
  const WeylElement c = coxeter_element(d, order);
  const int top = c.absolute_length();
  assert(top == d.rank);
  Memo memo;
  memo.emplace(WeylElement(d.rank), 1);
  Int count = count_below(c, top, refl, memo);
  return {std::move(count), static_cast<long>(memo.size())};
}

FactorizationCount count_reflection_factorizations_parallel(const DynkinDiagram& d,
                                                            std::span<const int> order) {
  const auto refl = all_reflections(d);
  const int num_refl = static_cast<int>(refl.size());
  const WeylElement c = coxeter_element(d, order);
  const int top = c.absolute_length();
  assert(top == d.rank);

  // Build the interval [e, c] level by level going down from c. Every
  // right-multiplication by a reflection that drops the length by one stays
  // inside the interval, and every interval element is reached this way.
  std::vector<std::vector<WeylElement>> level(top + 1);
  level[top] = {c};
  for (int len = top; len > 0; --len) {
    const auto& cur = level[len];
    const int n = static_cast<int>(cur.size());
    std::vector<std::vector<WeylElement>> found(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      for (const WeylElement& t : refl) {
        WeylElement wt = cur[i] * t;
        if (wt.absolute_length() == len - 1) found[i].push_back(std::move(wt));
      }
    }
    std::unordered_set<WeylElement, WeylElementHash> dedup;
    for (auto& group : found)
      for (auto& w : group) dedup.insert(std::move(w));
    auto& next = level[len - 1];
    next.assign(dedup.begin(), dedup.end());
    std::sort(next.begin(), next.end());  // canonical order, schedule-independent
  }

  // Sweep the counts upward one level at a time. Each element's sum walks
  // the reflection list in a fixed order, so the result does not depend on
  // the thread schedule.
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> below_index;
  std::vector<Int> below_counts{Int(1)};  // level 0 is the identity alone
  long visited = 1;
  for (int len = 1; len <= top; ++len) {
    below_index.clear();
    for (std::size_t i = 0; i < level[len - 1].size(); ++i)
      below_index.emplace(level[len - 1][i], i);
    const auto& cur = level[len];
    const int n = static_cast<int>(cur.size());
    visited += n;
    std::vector<Int> counts(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      Int total = 0;
      for (int t = 0; t < num_refl; ++t) {
        const WeylElement wt = cur[i] * refl[t];
        if (auto it = below_index.find(wt); it != below_index.end())
          total += below_counts[it->second];
      }
      counts[i] = std::move(total);
    }
    below_counts = std::move(counts);
  }
  assert(level[top].size() == 1);
  return {std::move(below_counts[0]), visited};
}

Int count_reflection_factorizations(const DynkinDiagram& d) {
  return count_reflection_factorizations_parallel(d).count;
}

Int weyl_group_order_by_closure(const DynkinDiagram& d) {
  const auto simple = simple_reflections(d);
  std::unordered_set<WeylElement, WeylElementHash> seen{WeylElement(d.rank)};
  std::vector<WeylElement> queue{WeylElement(d.rank)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const WeylElement current = queue[head];
    for (const WeylElement& s : simple) {
      WeylElement next = current * s;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return Int(static_cast<unsigned long>(queue.size()));
}

}  // namespace fec
