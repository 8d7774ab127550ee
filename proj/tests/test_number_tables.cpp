#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "trigsum/detail/bernoulli_rational.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/number_tables.hpp"
#include "test_support.hpp"

using trigsum::BernoulliTable;
using trigsum::Context;
using trigsum::EvenZetaTable;
using trigsum::Scalar;
using trigsum::ScalarEnv;
using trigsum::Workspace;
using test_support::abs_gap;
using test_support::scalar_from;

TEST_SUITE("number_tables") {

TEST_CASE("exact rational recurrence reproduces the classical fractions") {
  const auto fractions = trigsum::detail::bernoulli_even_fractions(8);
  const std::vector<std::string> expected = {
      "1/6", "-1/30", "1/42", "-1/30", "5/66", "-691/2730", "7/6", "-3617/510"};
  REQUIRE(fractions.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(fractions[i] == expected[i]);
  }
  CHECK_THROWS_AS(trigsum::detail::bernoulli_even_fractions(0),
                  std::invalid_argument);
  CHECK_THROWS_AS(trigsum::detail::bernoulli_even_fractions(65),
                  std::invalid_argument);
}

TEST_CASE("bernoulli table rounds the exact rationals once") {
  ScalarEnv env;
  BernoulliTable table(env);
  CHECK(table.depth() == BernoulliTable::kDefaultDepth);
  CHECK(table.at(1) == env.ratio(1, 6));
  CHECK(table.at(2) == env.ratio(-1, 30));
  CHECK(table.at(3) == env.ratio(1, 42));
  CHECK(table.at(6) == env.ratio(-691, 2730));
  CHECK(table.at(8) == env.ratio(-3617, 510));
  // b_32 = -7709321041217/510: the largest entry of the default table.
  CHECK(table.at(16) == env.ratio(-7'709'321'041'217, 510));
  CHECK_THROWS_AS(table.at(0), trigsum::capacity_error);
  CHECK_THROWS_AS(table.at(17), trigsum::capacity_error);
}

TEST_CASE("signs alternate starting positive and magnitudes eventually grow") {
  ScalarEnv env;
  BernoulliTable table(env, 20);
  for (int k = 1; k <= 20; ++k) {
    CHECK(table.at(k).sign() == (k % 2 == 1 ? 1 : -1));
  }
  CHECK(abs(table.at(20)) > abs(table.at(10)));
}

TEST_CASE("even zeta values match the pi-power closed forms") {
  ScalarEnv env;
  BernoulliTable bern(env);
  EvenZetaTable zt(env, bern);
  const Scalar pi2 = env.pi() * env.pi();
  CHECK(abs_gap(zt.zeta(1), pi2 / 6) < 1e-35);
  CHECK(abs_gap(zt.zeta(2), pi2 * pi2 / 90) < 1e-35);
  CHECK(abs_gap(zt.zeta(3), pi2 * pi2 * pi2 / 945) < 1e-35);
  CHECK(abs_gap(zt.eta(1), pi2 / 12) < 1e-35);

  const mpfr_prec_t prec = env.prec();
  CHECK(abs_gap(zt.zeta(1),
                scalar_from("1.64493406684822643647241516665", prec)) < 1e-28);
  CHECK(abs_gap(zt.zeta(2),
                scalar_from("1.08232323371113819151600369654", prec)) < 1e-28);
  CHECK(abs_gap(zt.eta(1),
                scalar_from("0.822467033424113218236207583323", prec)) <
        1e-28);
  CHECK_THROWS_AS(zt.zeta(0), trigsum::capacity_error);
  CHECK_THROWS_AS(zt.eta(17), trigsum::capacity_error);
}

TEST_CASE("zeta values decrease towards 1 and eta towards 1 from below") {
  ScalarEnv env;
  BernoulliTable bern(env);
  EvenZetaTable zt(env, bern);
  const Scalar one = env.integer(1);
  for (int k = 1; k < zt.depth(); ++k) {
    CHECK(zt.zeta(k) > zt.zeta(k + 1));
    CHECK(zt.zeta(k) > one);
    CHECK(zt.eta(k) < one);
    CHECK(zt.eta(k) < zt.eta(k + 1));
  }
}

TEST_CASE("workspace hands out a coherent context view") {
  Workspace ws;
  Context ctx = ws.context();
  CHECK(ctx.depth() == BernoulliTable::kDefaultDepth);
  CHECK(ctx.bernoulli(1) == ctx.env.ratio(1, 6));
  CHECK(abs_gap(ctx.zeta_even(1), ctx.env.pi() * ctx.env.pi() / 6) < 1e-35);
  CHECK(ctx.eta_even(1) < ctx.zeta_even(1));
  CHECK(&ctx.env == &ws.env());
}

TEST_CASE("deeper tables stay consistent with the default depth") {
  trigsum::PrecisionPolicy policy;
  policy.working_digits = 40;
  Workspace deep(policy, 32);
  Context ctx = deep.context();
  CHECK(ctx.depth() == 32);
  // zeta(64) - 1 = 2^-64 + 3^-64 + ... ~ 5.42e-20.
  CHECK(abs_gap(ctx.zeta_even(32), ctx.env.integer(1)) < 6e-20);
  CHECK(abs_gap(ctx.zeta_even(32), ctx.env.integer(1)) > 5e-20);
}

}  // TEST_SUITE
