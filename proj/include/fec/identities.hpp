#pragma once

#include "fec/exact.hpp"

namespace fec {

// Abel-type identities underlying the recursion-to-closed-form collapse.
// All verification is exact; j^{j-1} and j^{j-2} at j = 1 evaluate to 1,
// and (x-j)^0 = 1 including at x = j.

// n x^{n-1} == sum_{j=1}^{n} C(n,j) (x-j)^{n-j} j^{j-1}
bool check_abel_1(unsigned long n, const Rat& x);

// n(n-1)/2 x^{n-2} == sum_{j=1}^{n} C(n,j) (x-j)^{n-j} (j-1) j^{j-2}
// (both sides are 0 at n = 1).
bool check_abel_2(unsigned long n, const Rat& x);

// (n-1) n^n / 2 == sum_{j=1}^{n} C(n,j) (n-j)^{n-j+1} j^{j-2}
bool check_corollary(unsigned long n);

}  // namespace fec
