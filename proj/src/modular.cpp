#include "fec/modular.hpp"

#include <stdexcept>
#include <vector>

namespace fec {

namespace {

std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

Int index_psl(long n) {
  if (n < 1) throw std::domain_error("index_psl: level must be >= 1");
  if (n == 1) return 1;
  Rat v(Int(n) * n * n);
  for (long p : prime_divisors(n)) {
    Rat factor(p * p - 1, p * p);
    factor.canonicalize();
    v *= factor;
  }
  if (n >= 3) v /= 2;  // -id lies in the subgroup only for N <= 2
  return to_integer(v, "index_psl");
}

CuspCount cusp_count(long n) {
  if (n < 1) throw std::domain_error("cusp_count: level must be >= 1");
  const bool verified = n == 1 || n == 2 || n == 3 || n == 4 || n == 6;
  if (n == 1) return {Int(1), verified};
  const Int index = index_psl(n);
  Int value, rem;
  mpz_fdiv_qr_ui(value.get_mpz_t(), rem.get_mpz_t(), index.get_mpz_t(), n);
  if (rem != 0) throw std::logic_error("cusp_count: index not divisible by the level");
  return {std::move(value), verified};
}

Int sl2_order_bruteforce(long n) {
  if (n < 1) throw std::domain_error("sl2_order_bruteforce: level must be >= 1");
  if (n == 1) return 1;
  unsigned long count = 0;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d)
          if (((a * d - b * c) % n + n) % n == 1) ++count;
  return Int(count);
}

Int index_psl_bruteforce(long n) {
  Int order = sl2_order_bruteforce(n);
  if (n <= 2) return order;
  if (order % 2 != 0) throw std::logic_error("index_psl_bruteforce: odd SL2 order");
  return order / 2;
}

}  // namespace fec
