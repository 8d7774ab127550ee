#ifndef TRIGSUM_HARMONIC_SERIES_HPP
#define TRIGSUM_HARMONIC_SERIES_HPP

#include <cstdint>

#include "trigsum/number_tables.hpp"
#include "trigsum/precision.hpp"

namespace trigsum {

// Default cap on the number of harmonic steps (unit-fraction additions) any
// adaptive series evaluation may spend before raising budget_error.
inline constexpr std::int64_t kDefaultSeriesBudget = 10'000'000;

// Result of a certified series evaluation: |value - limit| <= tail_bound,
// and tail_bound <= the tolerance that was requested.
struct SeriesResult {
  Scalar value;
  Scalar tail_bound;
  std::int64_t terms_used;
};

// Incremental harmonic numbers H_n = sum_{k<=n} 1/k, accumulated at a guarded
// precision so that advancing in steps is as accurate as a fresh summation.
class HarmonicAccumulator {
 public:
  explicit HarmonicAccumulator(const ScalarEnv& env);

  // Adds 1/k for k in (index(), n]; n must not be smaller than index().
  void advance_to(std::int64_t n);

  std::int64_t index() const { return n_; }
  const Scalar& value() const { return h_; }

 private:
  std::int64_t n_ = 0;
  Scalar h_;
};

// H_n (H_0 = 0).
Scalar harmonic(std::int64_t n, const ScalarEnv& env);

// c_n = H_n - ln n - gamma - 1/(2n), the fully corrected harmonic defect;
// negative and squeezed against -1/(12 n^2).
Scalar c_term(std::int64_t n, const ScalarEnv& env);

// d_n = H_n - ln n - gamma, the plain harmonic defect; positive, decreasing.
Scalar d_term(std::int64_t n, const ScalarEnv& env);

// sum_{n>=1} c_{pn}, certified within tol.  The series converges too slowly
// to truncate naively, so the evaluation sums N leading terms and corrects
// the tail through the zeta-weighted expansion of c, leaving a remainder
// below |b_{2m}| zeta-tail / (2m p^{2m}); (m, N) are chosen adaptively.
SeriesResult c_series(std::int64_t p, double tol, const Context& ctx,
                      std::int64_t max_steps = kDefaultSeriesBudget);

// sum_{n>=1} (-1)^{n-1} d_{pn}, certified within tol; same scheme with the
// eta-weighted expansion plus the exact alternating part ln2/(2p).
SeriesResult d_series(std::int64_t p, double tol, const Context& ctx,
                      std::int64_t max_steps = kDefaultSeriesBudget);

// sum_{n>=0} (-1)^n (H_{p(n+1)} - H_{pn}), certified within tol.  The raw
// partial sums bracket the limit but tighten like 1/N; the evaluation
// repeatedly averages the partial-sum sequence, every averaged row bracketing
// the limit again (the term sequence is totally monotone), and keeps the
// tightest bracket seen.  Needs no gamma/zeta inputs, so its value is an
// independent anchor for the identity checks.
SeriesResult e_series(std::int64_t p, double tol, const ScalarEnv& env,
                      std::int64_t max_steps = kDefaultSeriesBudget);

}  // namespace trigsum

#endif  // TRIGSUM_HARMONIC_SERIES_HPP
