#pragma once

#include <gmpxx.h>

#include <string>

namespace fec {

// All counting in this library is exact. Int and Rat wrap GMP's
// arbitrary-precision integers and canonical-form rationals; nothing
// downstream ever touches floating point.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Int int_pow(const Int& base, unsigned long exp);

// base^exp with exp allowed to be negative (base must be nonzero then).
Rat rat_pow(const Rat& base, long exp);

// Exact cast to an integer. Throws std::domain_error naming `what` if q has
// a nontrivial denominator; divisions that must be exact go through here.
Int to_integer(const Rat& q, const char* what);

// Plain decimal rendering ("3/4" for non-integral rationals).
std::string to_decimal(const Int& v);
std::string to_decimal(const Rat& v);

}  // namespace fec
