#include "fec/identities.hpp"

namespace fec {

namespace {

// j^e for j >= 1 and integer e possibly negative; only reachable negative
// case is 1^-1 = 1 at the boundary term.
Rat unit_safe_pow(unsigned long j, long e) { return rat_pow(Rat(static_cast<long>(j)), e); }

}  // namespace

bool check_abel_1(unsigned long n, const Rat& x) {
  const Rat lhs = n * rat_pow(x, static_cast<long>(n) - 1);
  Rat rhs(0);
  for (unsigned long j = 1; j <= n; ++j) {
    Rat term(binomial(n, j));
    term *= rat_pow(x - static_cast<long>(j), static_cast<long>(n - j));
    term *= unit_safe_pow(j, static_cast<long>(j) - 1);
    rhs += term;
  }
  return lhs == rhs;
}

bool check_abel_2(unsigned long n, const Rat& x) {
  // The (n-1) factor kills the left side at n = 1 before x^{n-2} matters.
  Rat lhs(0);
  if (n >= 2) {
    lhs = Rat(Int(n) * (n - 1), 2);
    lhs.canonicalize();
    lhs *= rat_pow(x, static_cast<long>(n) - 2);
  }
  Rat rhs(0);
  for (unsigned long j = 2; j <= n; ++j) {  // j = 1 term carries the factor (j-1) = 0
    Rat term(binomial(n, j) * (j - 1));
    term *= rat_pow(x - static_cast<long>(j), static_cast<long>(n - j));
    term *= unit_safe_pow(j, static_cast<long>(j) - 2);
    rhs += term;
  }
  return lhs == rhs;
}

bool check_corollary(unsigned long n) {
  Rat lhs(Int(n - 1) * int_pow(Int(n), n), 2);
  lhs.canonicalize();
  Rat rhs(0);
  for (unsigned long j = 1; j <= n; ++j) {
    Rat term(binomial(n, j) * int_pow(Int(n - j), n - j + 1));
    term *= unit_safe_pow(j, static_cast<long>(j) - 2);
    rhs += term;
  }
  return lhs == rhs;
}

}  // namespace fec
