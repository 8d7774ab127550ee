#ifndef TRIGSUM_DETAIL_BERNOULLI_RATIONAL_HPP
#define TRIGSUM_DETAIL_BERNOULLI_RATIONAL_HPP

#include <mpfr.h>

#include <string>
#include <vector>

#include "trigsum/precision.hpp"

namespace trigsum::detail {

// Even-indexed Bernoulli numbers b_2, b_4, ..., b_{2*k_max} computed through
// the exact rational recurrence
//   b_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) b_j,   b_0 = 1,
// then rounded once into scalars of the requested binary precision.
// out[k-1] holds b_{2k}.
std::vector<Scalar> bernoulli_even_scalars(int k_max, mpfr_prec_t prec);

// Exact "num/den" decimal strings for the same numbers (tests and audits).
std::vector<std::string> bernoulli_even_fractions(int k_max);

}  // namespace trigsum::detail

#endif  // TRIGSUM_DETAIL_BERNOULLI_RATIONAL_HPP
