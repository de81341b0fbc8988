#include "fec/exact.hpp"

#include <stdexcept>

namespace fec {

Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), exp);
  return p;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0) {
    if (exp < 0) throw std::domain_error("rat_pow: 0 raised to a negative power");
    return Rat(0);
  }
  const unsigned long e = exp < 0 ? -static_cast<unsigned long>(exp) : exp;
  Rat p;
  mpz_pow_ui(p.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(p.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  if (exp < 0) p = 1 / p;
  p.canonicalize();
  return p;
}

Int to_integer(const Rat& q, const char* what) {
  if (q.get_den() != 1)
    throw std::domain_error(std::string(what) + ": value " + q.get_str() +
                            " is not an integer");
  return q.get_num();
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_decimal(const Rat& v) { return v.get_str(); }

}  // namespace fec
