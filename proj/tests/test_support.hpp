#ifndef TRIGSUM_TESTS_TEST_SUPPORT_HPP
#define TRIGSUM_TESTS_TEST_SUPPORT_HPP

#include <mpfr.h>

#include <string>

#include "trigsum/precision.hpp"

namespace test_support {

// Parse a decimal literal into a scalar of the given binary precision.
inline trigsum::Scalar scalar_from(const std::string& text, mpfr_prec_t prec) {
  trigsum::Scalar s(prec);
  mpfr_set_str(s.raw(), text.c_str(), 10, MPFR_RNDN);
  return s;
}

// |a - b| as a double (coarse, fine for test tolerances down to ~1e-300).
inline double abs_gap(const trigsum::Scalar& a, const trigsum::Scalar& b) {
  return trigsum::abs(a - b).to_double();
}

// |a - b| / max(1, |a|, |b|) as a double.
inline double rel_gap(const trigsum::Scalar& a, const trigsum::Scalar& b) {
  trigsum::Scalar scale = trigsum::abs(a);
  const trigsum::Scalar mb = trigsum::abs(b);
  if (mb > scale) scale = mb;
  const trigsum::Scalar one = trigsum::Scalar::integer(1, a.precision());
  if (one > scale) scale = one;
  return (trigsum::abs(a - b) / scale).to_double();
}

}  // namespace test_support

#endif  // TRIGSUM_TESTS_TEST_SUPPORT_HPP
