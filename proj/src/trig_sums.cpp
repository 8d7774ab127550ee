#include "trigsum/trig_sums.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trigsum {

namespace {

constexpr mpfr_prec_t kAccumGuardBits = 32;

void check_p(std::int64_t p) {
  if (p < 1) {
    throw std::invalid_argument("trig sums: p must be a positive integer");
  }
}

// sin(a*pi/b) for 1 <= a <= b-1, evaluated after folding the angle into
// (0, pi/2] so the argument handed to the kernel is always well conditioned.
Scalar sin_pi_ratio(std::int64_t a, std::int64_t b, const Scalar& pi) {
  const std::int64_t folded = std::min(a, b - a);
  return sin(pi * folded / b);
}

// cos(a*pi/b) for 1 <= a <= b-1 as a sign times sin of a folded angle in
// [0, pi/2); returns an exact zero when the angle is exactly pi/2.
Scalar cos_pi_ratio(std::int64_t a, std::int64_t b, const Scalar& pi) {
  const std::int64_t c = b - 2 * a;
  if (c == 0) return Scalar::zero(pi.precision());
  Scalar s = sin(pi * (c < 0 ? -c : c) / (2 * b));
  return c < 0 ? -s : s;
}

// cot(a*pi/b) for 1 <= a <= b-1: a single fused sine/cosine evaluation of the
// angle folded into (0, pi/2), negated on the far side; exact zero at pi/2.
Scalar cot_pi_ratio(std::int64_t a, std::int64_t b, const Scalar& pi) {
  const std::int64_t c = b - 2 * a;
  if (c == 0) return Scalar::zero(pi.precision());
  const std::int64_t folded = std::min(a, b - a);
  const Scalar angle = pi * folded / b;
  Scalar s(pi.precision());
  Scalar co(pi.precision());
  mpfr_sin_cos(s.raw(), co.raw(), angle.raw(), MPFR_RNDN);
  Scalar out = co / s;
  return c < 0 ? -out : out;
}

// tan(a*pi/b) for an angle already inside (0, pi/2), same fused evaluation.
Scalar tan_pi_ratio(std::int64_t a, std::int64_t b, const Scalar& pi) {
  const Scalar angle = pi * a / b;
  Scalar s(pi.precision());
  Scalar co(pi.precision());
  mpfr_sin_cos(s.raw(), co.raw(), angle.raw(), MPFR_RNDN);
  return s / co;
}

Scalar finish(Scalar& acc, const ScalarEnv& env) {
  return acc.rounded_to(env.prec());
}

}  // namespace

Scalar cosecant_sum(std::int64_t p, const ScalarEnv& env) {
  check_p(p);
  const Scalar& pi = env.pi();
  Scalar acc = Scalar::zero(env.prec() + kAccumGuardBits);
  // csc(k*pi/p) = csc((p-k)*pi/p): fold k against p-k and double.
  for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
    acc += 1 / sin_pi_ratio(k, p, pi);
  }
  acc *= 2;
  if (p % 2 == 0 && p > 1) acc += 1;  // middle term csc(pi/2)
  return finish(acc, env);
}

Scalar cotangent_sum(std::int64_t p, const ScalarEnv& env) {
  check_p(p);
  const Scalar& pi = env.pi();
  Scalar acc = Scalar::zero(env.prec() + kAccumGuardBits);
  // k*cot(k*pi/p) + (p-k)*cot((p-k)*pi/p) = (2k-p)*cot(k*pi/p); the middle
  // term of even p is (p/2)*cot(pi/2) = 0.
  for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
    acc += cot_pi_ratio(k, p, pi) * (2 * k - p);
  }
  return finish(acc, env);
}

Scalar tangent_sum(std::int64_t p, const ScalarEnv& env) {
  check_p(p);
  const Scalar& pi = env.pi();
  Scalar acc = Scalar::zero(env.prec() + kAccumGuardBits);
  for (std::int64_t k = 1; k <= p - 1; ++k) {
    acc += tan_pi_ratio(k, 2 * p, pi);
  }
  return finish(acc, env);
}

Scalar cot_half_sum(std::int64_t p, const ScalarEnv& env) {
  check_p(p);
  const Scalar& pi = env.pi();
  Scalar acc = Scalar::zero(env.prec() + kAccumGuardBits);
  for (std::int64_t k = 1; k <= p - 1; ++k) {
    acc += cot_pi_ratio(k, 2 * p, pi);
  }
  return finish(acc, env);
}

Scalar weighted_cosecant_sum(std::int64_t p, const ScalarEnv& env) {
  check_p(p);
  const Scalar& pi = env.pi();
  Scalar acc = Scalar::zero(env.prec() + kAccumGuardBits);
  for (std::int64_t k = 1; k <= p - 1; ++k) {
    acc += Scalar::integer(k, env.prec()) / sin_pi_ratio(k, p, pi);
  }
  return finish(acc, env);
}

Scalar odd_cotangent_sum(std::int64_t p, const ScalarEnv& env) {
  check_p(p);
  const Scalar& pi = env.pi();
  Scalar acc = Scalar::zero(env.prec() + kAccumGuardBits);
  for (std::int64_t k = 1; k <= p; ++k) {
    const std::int64_t odd = 2 * k - 1;
    acc += cot_pi_ratio(odd, 2 * p, pi) * odd;
  }
  return finish(acc, env);
}

Scalar secant_power_sum(std::int64_t p, int power, const ScalarEnv& env) {
  check_p(p);
  if (power != 2 && power != 4) {
    throw std::invalid_argument("secant_power_sum: power must be 2 or 4");
  }
  const Scalar& pi = env.pi();
  Scalar acc = Scalar::zero(env.prec() + kAccumGuardBits);
  for (std::int64_t k = 1; k <= p - 1; ++k) {
    Scalar c = cos_pi_ratio(k, 2 * p, pi);
    Scalar term = 1 / (c * c);
    if (power == 4) term *= term;
    acc += term;
  }
  return finish(acc, env);
}

Scalar closed_form_secant_power(std::int64_t p, int power, const ScalarEnv& env) {
  check_p(p);
  const Scalar p2 = pow_int(env.integer(p), 2);
  if (power == 2) {
    return (p2 - 1) * 2 / 3;
  }
  if (power == 4) {
    return (p2 * p2 * 2 + p2 * 5 - 7) * 4 / 45;
  }
  throw std::invalid_argument("closed_form_secant_power: power must be 2 or 4");
}

Scalar kou_secant_sum(std::int64_t p, const ScalarEnv& env) {
  check_p(p);
  const Scalar& pi = env.pi();
  Scalar acc = Scalar::zero(env.prec() + kAccumGuardBits);
  for (std::int64_t k = 1; k <= p; ++k) {
    acc += 1 / cos_pi_ratio(2 * k, 2 * p + 1, pi);
  }
  return finish(acc, env);
}

Scalar kou_closed_form(std::int64_t p, const ScalarEnv& env) {
  check_p(p);
  return env.integer(p % 2 == 0 ? p : -(p + 1));
}

Scalar trig_sum(TrigSumKind kind, std::int64_t p, const ScalarEnv& env) {
  switch (kind) {
    case TrigSumKind::Cosecant:
      return cosecant_sum(p, env);
    case TrigSumKind::Cotangent:
      return cotangent_sum(p, env);
    case TrigSumKind::Tangent:
      return tangent_sum(p, env);
    case TrigSumKind::CotangentHalf:
      return cot_half_sum(p, env);
    case TrigSumKind::WeightedCosecant:
      return weighted_cosecant_sum(p, env);
    case TrigSumKind::OddCotangent:
      return odd_cotangent_sum(p, env);
  }
  throw std::invalid_argument("trig_sum: unknown kind");
}

}  // namespace trigsum
