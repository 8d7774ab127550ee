#include <doctest.h>

#include <stdexcept>

#include "trigsum/precision.hpp"
#include "trigsum/trig_sums.hpp"
#include "test_support.hpp"

using trigsum::Scalar;
using trigsum::ScalarEnv;
using trigsum::TrigSumKind;
using test_support::abs_gap;
using test_support::rel_gap;
using test_support::scalar_from;

namespace {
// 4/sqrt(3): value of the p = 3 cosecant sum, and of both half-angle sums.
const char* kFourOverRoot3 = "2.30940107675850305803659512201";
// -1/sqrt(3): the p = 3 weighted cotangent sum.
const char* kMinusInvRoot3 = "-0.577350269189625764509148780502";
// 2*sqrt(3): the p = 3 weighted cosecant sum.
const char* kTwoRoot3 = "3.46410161513775458705489268301";
}  // namespace

TEST_SUITE("trig_sums") {

TEST_CASE("empty sums at p = 1 are exact zeros") {
  ScalarEnv env;
  CHECK(trigsum::cosecant_sum(1, env).is_zero());
  CHECK(trigsum::cotangent_sum(1, env).is_zero());
  CHECK(trigsum::tangent_sum(1, env).is_zero());
  CHECK(trigsum::cot_half_sum(1, env).is_zero());
  CHECK(trigsum::weighted_cosecant_sum(1, env).is_zero());
  CHECK(trigsum::secant_power_sum(1, 2, env).is_zero());
  CHECK(trigsum::secant_power_sum(1, 4, env).is_zero());
}

TEST_CASE("terms with a vanishing cosine contribute exact zeros") {
  ScalarEnv env;
  // p = 2: the single cotangent term sits at the right angle.
  CHECK(trigsum::cotangent_sum(2, env).is_zero());
  // p = 1: the single odd-cotangent term sits at the right angle.
  CHECK(trigsum::odd_cotangent_sum(1, env).is_zero());
}

TEST_CASE("small closed forms in radicals") {
  ScalarEnv env;
  const mpfr_prec_t prec = env.prec();

  CHECK(abs_gap(trigsum::cosecant_sum(2, env), env.integer(1)) < 1e-36);
  CHECK(abs_gap(trigsum::cosecant_sum(3, env),
                scalar_from(kFourOverRoot3, prec)) < 1e-28);
  // 1 + 2*sqrt(2)
  const Scalar i4 = 1 + 2 * sqrt(env.integer(2));
  CHECK(abs_gap(trigsum::cosecant_sum(4, env), i4) < 1e-35);

  CHECK(abs_gap(trigsum::cotangent_sum(3, env),
                scalar_from(kMinusInvRoot3, prec)) < 1e-28);
  CHECK(abs_gap(trigsum::weighted_cosecant_sum(3, env),
                scalar_from(kTwoRoot3, prec)) < 1e-28);

  // tan(pi/6) + tan(pi/3) = cot(pi/6) + cot(pi/3) = 4/sqrt(3).
  CHECK(abs_gap(trigsum::tangent_sum(3, env),
                scalar_from(kFourOverRoot3, prec)) < 1e-28);
  CHECK(abs_gap(trigsum::cot_half_sum(3, env),
                scalar_from(kFourOverRoot3, prec)) < 1e-28);

  // cot(pi/4) + 3*cot(3*pi/4) = 1 - 3.
  CHECK(abs_gap(trigsum::odd_cotangent_sum(2, env), env.integer(-2)) < 1e-35);
}

TEST_CASE("half-angle sums agree with the cosecant sum across p") {
  ScalarEnv env;
  for (std::int64_t p : {2, 5, 8, 13, 31}) {
    const Scalar i = trigsum::cosecant_sum(p, env);
    CHECK(rel_gap(trigsum::tangent_sum(p, env), i) < 1e-34);
    CHECK(rel_gap(trigsum::cot_half_sum(p, env), i) < 1e-34);
    // Doubling the weighted sum recovers p times the plain sum.
    CHECK(rel_gap(2 * trigsum::weighted_cosecant_sum(p, env), p * i) < 1e-34);
    // The odd-cotangent sum collapses to -p times the plain sum.
    CHECK(rel_gap(trigsum::odd_cotangent_sum(p, env), -p * i) < 1e-34);
  }
}

TEST_CASE("secant power sums hit their rational closed forms") {
  ScalarEnv env;
  // power 2, p = 3: 2(9-1)/3 = 16/3; power 4, p = 2: 4(32+20-7)/45 = 4.
  CHECK(trigsum::closed_form_secant_power(3, 2, env) == env.ratio(16, 3));
  CHECK(trigsum::closed_form_secant_power(2, 4, env) == env.integer(4));
  for (std::int64_t p : {1, 2, 3, 7, 25}) {
    CHECK(rel_gap(trigsum::secant_power_sum(p, 2, env),
                  trigsum::closed_form_secant_power(p, 2, env)) < 1e-33);
    CHECK(rel_gap(trigsum::secant_power_sum(p, 4, env),
                  trigsum::closed_form_secant_power(p, 4, env)) < 1e-33);
  }
  CHECK_THROWS_AS(trigsum::secant_power_sum(3, 3, env), std::invalid_argument);
  CHECK_THROWS_AS(trigsum::closed_form_secant_power(3, 6, env),
                  std::invalid_argument);
}

TEST_CASE("odd-denominator secant sums hit their integer closed forms") {
  ScalarEnv env;
  CHECK(trigsum::kou_closed_form(4, env) == env.integer(4));
  CHECK(trigsum::kou_closed_form(7, env) == env.integer(-8));
  for (std::int64_t p : {1, 2, 3, 4, 5, 10, 33}) {
    CHECK(rel_gap(trigsum::kou_secant_sum(p, env),
                  trigsum::kou_closed_form(p, env)) < 1e-32);
  }
}

TEST_CASE("dispatcher reaches every kind") {
  ScalarEnv env;
  const std::int64_t p = 5;
  CHECK(trigsum::trig_sum(TrigSumKind::Cosecant, p, env) ==
        trigsum::cosecant_sum(p, env));
  CHECK(trigsum::trig_sum(TrigSumKind::Cotangent, p, env) ==
        trigsum::cotangent_sum(p, env));
  CHECK(trigsum::trig_sum(TrigSumKind::Tangent, p, env) ==
        trigsum::tangent_sum(p, env));
  CHECK(trigsum::trig_sum(TrigSumKind::CotangentHalf, p, env) ==
        trigsum::cot_half_sum(p, env));
  CHECK(trigsum::trig_sum(TrigSumKind::WeightedCosecant, p, env) ==
        trigsum::weighted_cosecant_sum(p, env));
  CHECK(trigsum::trig_sum(TrigSumKind::OddCotangent, p, env) ==
        trigsum::odd_cotangent_sum(p, env));
}

TEST_CASE("evaluation is deterministic") {
  ScalarEnv env;
  CHECK(trigsum::cosecant_sum(97, env) == trigsum::cosecant_sum(97, env));
  CHECK(trigsum::cotangent_sum(97, env) == trigsum::cotangent_sum(97, env));
}

TEST_CASE("positivity and monotonicity of the cosecant sum") {
  ScalarEnv env;
  Scalar prev = Scalar::zero(env.prec());
  for (std::int64_t p = 2; p <= 40; ++p) {
    const Scalar cur = trigsum::cosecant_sum(p, env);
    CHECK(cur > prev);  // grows roughly like (2p/pi) ln p
    prev = cur;
  }
}

TEST_CASE("invalid expansion points are rejected") {
  ScalarEnv env;
  CHECK_THROWS_AS(trigsum::cosecant_sum(0, env), std::invalid_argument);
  CHECK_THROWS_AS(trigsum::cotangent_sum(-1, env), std::invalid_argument);
  CHECK_THROWS_AS(trigsum::tangent_sum(0, env), std::invalid_argument);
  CHECK_THROWS_AS(trigsum::cot_half_sum(0, env), std::invalid_argument);
  CHECK_THROWS_AS(trigsum::weighted_cosecant_sum(0, env),
                  std::invalid_argument);
  CHECK_THROWS_AS(trigsum::odd_cotangent_sum(0, env), std::invalid_argument);
  CHECK_THROWS_AS(trigsum::secant_power_sum(0, 2, env), std::invalid_argument);
  CHECK_THROWS_AS(trigsum::kou_secant_sum(0, env), std::invalid_argument);
}

TEST_CASE("higher working precision refines the same value") {
  trigsum::PrecisionPolicy policy;
  policy.working_digits = 60;
  ScalarEnv wide(policy);
  ScalarEnv narrow;
  const Scalar coarse = trigsum::cosecant_sum(50, narrow);
  const Scalar fine = trigsum::cosecant_sum(50, wide);
  CHECK(rel_gap(coarse, fine) < 1e-29);
}

}  // TEST_SUITE
