#ifndef TRIGSUM_ASYMPTOTICS_HPP
#define TRIGSUM_ASYMPTOTICS_HPP

#include <cstdint>

#include "trigsum/number_tables.hpp"
#include "trigsum/precision.hpp"

namespace trigsum {

enum class ExpansionTarget {
  Harmonic,      // H_n
  CSeries,       // sum of c_{pn}
  DSeries,       // alternating sum of d_{pn}
  CosecantSum,   // sum of csc(k*pi/p)
  CotangentSum,  // sum of (2k-p)*cot(k*pi/p)
};

// A truncated asymptotic expansion together with a certified two-sided
// bracket: the exact quantity lies in [lower, upper].  Endpoints are widened
// by four representable steps so rounding cannot fake an enclosure.
struct ExpansionResult {
  ExpansionTarget target;
  std::int64_t p;     // expansion point (n for the harmonic target)
  int order;          // truncation depth m, or bracket level n for the sums
  Scalar truncated;   // the truncation itself, no remainder term
  Scalar lower;
  Scalar upper;
  // The requested depth is past the useful regime: the next bracket would be
  // wider than this one (the expansions are divergent), or the depth exceeds
  // the heuristic guard 3*p.  Diagnostic only; the bracket stays valid.
  bool past_useful_depth = false;

  Scalar width() const { return upper - lower; }
};

// H_n = ln n + gamma + 1/(2n) - sum_{k=1}^{m-1} b_{2k}/(2k n^{2k}) + r, with
// 0 < (-1)^m r < |b_{2m}|/(2m n^{2m}); m >= 1, any n >= 1.
ExpansionResult h_expansion(std::int64_t n, int m, const Context& ctx);

// Limit of the c-series: -sum_{k=1}^{m-1} b_{2k} zeta(2k)/(2k p^{2k}) plus a
// remainder below zeta(2m)|b_{2m}|/(2m p^{2m}), signed by the parity of m.
ExpansionResult c_expansion(std::int64_t p, int m, const Context& ctx);

// Limit of the d-series: ln2/(2p) - sum_{k=1}^{m-1} b_{2k} eta(2k)/(2k p^{2k})
// plus a remainder below eta(2m)|b_{2m}|/(2m p^{2m}).
ExpansionResult d_expansion(std::int64_t p, int m, const Context& ctx);

// Bracket level n for the cosecant sum: around the main term
// (2p/pi)(ln p + gamma - ln(pi/2)), correction terms
// (-1)^k (2^{2k}-2) b_{2k}^2 / (k (2k)!) (pi/p)^{2k-1}; the upper endpoint
// keeps 2n of them, the lower 2n+1.
ExpansionResult i_expansion(std::int64_t p, int n, const Context& ctx);

// Bracket level n for the weighted cotangent sum: around
// (-p^2 ln p + (ln 2pi - gamma) p^2 - p)/pi, correction terms
// 2pi (-1)^k b_{2k}^2 / (k (2k)!) (2pi/p)^{2k-2}, same 2n / 2n+1 split.
ExpansionResult j_expansion(std::int64_t p, int n, const Context& ctx);

// theta_p = -pi*J_p - p^2 H_p + ln(2pi) p^2 - p/2, where J_p is the weighted
// cotangent sum; lies in (0, 1) for every p.
Scalar j_harmonic_residual(std::int64_t p, const ScalarEnv& env);

// Same residual from already-computed inputs (sweeps keep J_p and H_p
// incremental and avoid recomputing them here).
Scalar j_harmonic_residual(std::int64_t p, const Scalar& cotangent_value,
                           const Scalar& harmonic_value, const ScalarEnv& env);

}  // namespace trigsum

#endif  // TRIGSUM_ASYMPTOTICS_HPP
