#pragma once

#include "fec/exact.hpp"

namespace fec {

// Index of the principal congruence subgroup image in PSL(2,Z):
//   N = 1:  1
//   N = 2:  N^3 prod_{p|N} (1 - p^-2)          (-id lies in Gamma(2))
//   N >= 3: N^3 prod_{p|N} (1 - p^-2) / 2      (-id does not)
Int index_psl(long n);

struct CuspCount {
  Int value;
  // The table values are asserted only for N in {1,2,3,4,6}; outside that
  // range the value (index/N) is reported but flagged unverified.
  bool verified;
};
CuspCount cusp_count(long n);

// |SL(2, Z/N)| by enumerating all matrices mod N with determinant 1.
// Independent oracle for index_psl; cost N^4, meant for small N.
Int sl2_order_bruteforce(long n);

// PSL index via the brute-force group order.
Int index_psl_bruteforce(long n);

}  // namespace fec
