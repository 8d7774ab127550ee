#include <doctest.h>

#include <stdexcept>
#include <string>

#include "trigsum/precision.hpp"
#include "test_support.hpp"

using trigsum::PrecisionPolicy;
using trigsum::Scalar;
using trigsum::ScalarEnv;
using test_support::abs_gap;
using test_support::scalar_from;

namespace {
// 50 correctly rounded digits of Euler's constant.
const char* kGamma50 =
    "0.57721566490153286060651209008240243104215933593992";
const char* kLn2 = "0.69314718055994530941723212145817657";
const char* kLnPiOver2 = "0.45158270528945486472619522989488214";
const char* kLn2Pi = "1.8378770664093454835606594728112353";
}  // namespace

TEST_SUITE("precision") {

TEST_CASE("policy maps decimal digits to guarded binary precision") {
  PrecisionPolicy p;
  CHECK(p.working_digits == 30);
  CHECK(p.check_margin == 5);
  // ceil((digits + 8) * log2(10))
  CHECK(p.precision_bits() == 127);
  p.working_digits = 15;
  CHECK(p.precision_bits() == 77);
  p.working_digits = 120;
  CHECK(p.precision_bits() == 426);
}

TEST_CASE("policy validation rejects out-of-range settings") {
  PrecisionPolicy p;
  CHECK_NOTHROW(p.validate());
  p.working_digits = 14;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.working_digits = 121;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.working_digits = 30;
  p.check_margin = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.check_margin = 30;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("scalar constructors and exact small arithmetic") {
  const mpfr_prec_t prec = 127;
  CHECK(Scalar::zero(prec).is_zero());
  CHECK(Scalar::integer(7, prec) + Scalar::integer(5, prec) ==
        Scalar::integer(12, prec));
  // 1/4 and 3/4 are exactly representable.
  CHECK(1 - Scalar::ratio(1, 4, prec) == Scalar::ratio(3, 4, prec));
  CHECK(Scalar::ratio(-3, 6, prec) == Scalar::ratio(-1, 2, prec));
  // Both round the same real number once.
  CHECK(Scalar::pow10(-12, prec) == Scalar::ratio(1, 1'000'000'000'000, prec));
  CHECK(Scalar::integer(-4, prec).sign() == -1);
  CHECK(Scalar::integer(0, prec).sign() == 0);
  CHECK_THROWS_AS(Scalar::ratio(1, 0, prec), std::invalid_argument);
}

TEST_CASE("copy preserves precision and value; moves do not reallocate") {
  Scalar wide = Scalar::ratio(1, 3, 256);
  Scalar copy = wide;
  CHECK(copy.precision() == 256);
  CHECK(copy == wide);
  Scalar moved = std::move(copy);
  CHECK(moved.precision() == 256);
  CHECK(moved == wide);
}

TEST_CASE("binary operators round once into the wider precision") {
  Scalar narrow = Scalar::ratio(1, 3, 64);
  Scalar wide = Scalar::ratio(1, 3, 256);
  Scalar sum = narrow + wide;
  CHECK(sum.precision() == 256);
  // In-place ops keep the accumulator precision.
  Scalar acc = Scalar::zero(256);
  acc += narrow;
  CHECK(acc.precision() == 256);
}

TEST_CASE("mixed integer arithmetic matches scalar arithmetic") {
  const mpfr_prec_t prec = 127;
  Scalar x = Scalar::ratio(2, 7, prec);
  CHECK(3 * x == Scalar::integer(3, prec) * x);
  CHECK(3 - x == Scalar::integer(3, prec) - x);
  CHECK(3 / x == Scalar::integer(3, prec) / x);
  CHECK(x / 3 == x / Scalar::integer(3, prec));
  CHECK_THROWS_AS(x / 0, std::invalid_argument);
}

TEST_CASE("elementary functions agree with algebraic identities") {
  const mpfr_prec_t prec = 127;
  Scalar two = Scalar::integer(2, prec);
  CHECK(abs_gap(sqrt(two) * sqrt(two), two) < 1e-36);
  CHECK(abs_gap(exp(log(two)), two) < 1e-36);
  CHECK(abs_gap(pow_int(two, 10), Scalar::integer(1024, prec)) == 0.0);
  CHECK(pow_int(two, -1) == Scalar::ratio(1, 2, prec));
  CHECK(abs(Scalar::integer(-9, prec)) == Scalar::integer(9, prec));
}

TEST_CASE("string round trip keeps the stated number of digits") {
  const mpfr_prec_t prec = 127;
  Scalar root = sqrt(Scalar::integer(2, prec));
  const std::string text = root.to_string(30);
  Scalar back = scalar_from(text, prec);
  CHECK(abs_gap(root, back) < 1e-28);
  CHECK(Scalar::integer(2, prec).to_display_string(10) == "2");
}

TEST_CASE("neighbour steps move strictly and minimally") {
  const mpfr_prec_t prec = 127;
  Scalar x = Scalar::ratio(1, 3, prec);
  Scalar up = next_above(x);
  Scalar down = next_below(x);
  CHECK(up > x);
  CHECK(down < x);
  CHECK(abs_gap(up, down) < 1e-37);
}

TEST_CASE("environment constants match frozen references") {
  ScalarEnv env;  // 30 working digits
  const mpfr_prec_t prec = env.prec();
  CHECK(abs_gap(env.euler_gamma(), scalar_from(kGamma50, prec)) < 1e-33);
  CHECK(abs_gap(env.ln2(), scalar_from(kLn2, prec)) < 1e-33);
  CHECK(abs_gap(env.ln_pi_over_2(), scalar_from(kLnPiOver2, prec)) < 1e-33);
  CHECK(abs_gap(env.ln_2pi(), scalar_from(kLn2Pi, prec)) < 1e-33);
  // pi is consistent: sin(pi) vanishes to working accuracy.
  CHECK(abs(sin(env.pi())).to_double() < 1e-36);
  // And the logarithmic constants are mutually consistent.
  CHECK(abs_gap(env.ln_pi_over_2() + 2 * env.ln2(), env.ln_2pi()) < 1e-36);
}

TEST_CASE("euler gamma tightens with the requested digit count") {
  PrecisionPolicy p;
  p.working_digits = 45;
  ScalarEnv env(p);
  CHECK(abs_gap(env.euler_gamma(), scalar_from(kGamma50, env.prec())) < 1e-48);
}

TEST_CASE("tolerance floor reflects the check margin") {
  ScalarEnv env;  // digits 30, margin 5
  CHECK(env.tolerance_floor() == Scalar::pow10(-25, env.prec()));
  CHECK(trigsum::equal_within(Scalar::integer(1, env.prec()),
                              Scalar::integer(1, env.prec()) +
                                  Scalar::pow10(-26, env.prec()),
                              env.tolerance_floor()));
  CHECK_FALSE(trigsum::equal_within(Scalar::integer(1, env.prec()),
                                    Scalar::integer(2, env.prec()),
                                    env.tolerance_floor()));
}

TEST_CASE("environment rejects invalid policies") {
  PrecisionPolicy p;
  p.working_digits = 10;
  CHECK_THROWS_AS(ScalarEnv{p}, std::invalid_argument);
}

}  // TEST_SUITE
