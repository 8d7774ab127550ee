#ifndef TRIGSUM_TRIG_SUMS_HPP
#define TRIGSUM_TRIG_SUMS_HPP

#include <cstdint>

#include "trigsum/precision.hpp"

namespace trigsum {

// Finite sums over the regular angles k*pi/p and their half/odd variants.
// Every routine validates p >= 1 and returns a value rounded once into the
// environment precision; angle arguments are folded into [0, pi/2] before any
// trigonometric evaluation, and terms whose cosine factor vanishes exactly
// (cot or cos at pi/2) contribute an exact zero rather than a rounded one.

// sum_{k=1}^{p-1} csc(k*pi/p); 0 when p = 1.
Scalar cosecant_sum(std::int64_t p, const ScalarEnv& env);

// sum_{k=1}^{p-1} k*cot(k*pi/p); 0 when p = 1.
Scalar cotangent_sum(std::int64_t p, const ScalarEnv& env);

// sum_{k=1}^{p-1} tan(k*pi/(2p)).
Scalar tangent_sum(std::int64_t p, const ScalarEnv& env);

// sum_{k=1}^{p-1} cot(k*pi/(2p)).
Scalar cot_half_sum(std::int64_t p, const ScalarEnv& env);

// sum_{k=1}^{p-1} k*csc(k*pi/p).
Scalar weighted_cosecant_sum(std::int64_t p, const ScalarEnv& env);

// sum_{k=1}^{p} (2k-1)*cot((2k-1)*pi/(2p)).
Scalar odd_cotangent_sum(std::int64_t p, const ScalarEnv& env);

// sum_{k=1}^{p-1} sec^power(k*pi/(2p)) for power in {2, 4}
// (std::invalid_argument otherwise).
Scalar secant_power_sum(std::int64_t p, int power, const ScalarEnv& env);

// The rational values the secant power sums collapse to:
//   power 2:  2(p^2 - 1)/3
//   power 4:  4(2p^4 + 5p^2 - 7)/45
Scalar closed_form_secant_power(std::int64_t p, int power, const ScalarEnv& env);

// sum_{k=1}^{p} sec(2k*pi/(2p+1)).
Scalar kou_secant_sum(std::int64_t p, const ScalarEnv& env);

// The integer that sum collapses to: p for even p, -(p+1) for odd p.
Scalar kou_closed_form(std::int64_t p, const ScalarEnv& env);

enum class TrigSumKind {
  Cosecant,          // csc(k*pi/p)
  Cotangent,         // k*cot(k*pi/p)
  Tangent,           // tan(k*pi/(2p))
  CotangentHalf,     // cot(k*pi/(2p))
  WeightedCosecant,  // k*csc(k*pi/p)
  OddCotangent,      // (2k-1)*cot((2k-1)*pi/(2p))
};

Scalar trig_sum(TrigSumKind kind, std::int64_t p, const ScalarEnv& env);

}  // namespace trigsum

#endif  // TRIGSUM_TRIG_SUMS_HPP
