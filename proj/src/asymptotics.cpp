#include "trigsum/asymptotics.hpp"

#include <gmp.h>

#include <stdexcept>
#include <string>

#include "trigsum/errors.hpp"
#include "trigsum/harmonic_series.hpp"
#include "trigsum/trig_sums.hpp"

namespace trigsum {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

void check_point(std::int64_t p, const char* who) {
  if (p < 1) {
    throw std::invalid_argument(std::string(who) +
                                ": expansion point must be >= 1");
  }
}

void check_depth_available(int needed, const Context& ctx, const char* who) {
  if (needed > ctx.depth()) {
    throw capacity_error(std::string(who) + ": truncation depth needs " +
                         std::to_string(needed) +
                         " table entries, tables hold " +
                         std::to_string(ctx.depth()));
  }
}

bool beyond_guard(std::int64_t depth_used, std::int64_t p) {
  return depth_used > std::max<std::int64_t>(1, 3 * p);
}

// Round a wide-precision enclosure outward into the working precision and
// widen each endpoint by four representable steps.
ExpansionResult finish(ExpansionTarget target, std::int64_t p, int order,
                       const Scalar& truncated, const Scalar& lo_wide,
                       const Scalar& hi_wide, bool past,
                       const ScalarEnv& env) {
  Scalar lower(env.prec());
  Scalar upper(env.prec());
  mpfr_set(lower.raw(), lo_wide.raw(), MPFR_RNDD);
  mpfr_set(upper.raw(), hi_wide.raw(), MPFR_RNDU);
  for (int i = 0; i < 4; ++i) {
    mpfr_nextbelow(lower.raw());
    mpfr_nextabove(upper.raw());
  }
  return ExpansionResult{target,
                         p,
                         order,
                         truncated.rounded_to(env.prec()),
                         std::move(lower),
                         std::move(upper),
                         past};
}

// Shared core of the three parity-oriented expansions (harmonic, c, d):
// T_m +/- beta_m with the even-m bracket above T and the odd-m bracket below.
struct ParityTerms {
  Scalar truncation;   // T_m
  Scalar beta;         // remainder bound at depth m
  Scalar beta_next;    // remainder bound at depth m+1 (NaN if unavailable)
};

ExpansionResult parity_expansion(ExpansionTarget target, std::int64_t p, int m,
                                 const ParityTerms& t, const Context& ctx) {
  Scalar lo_wide = (m % 2 == 0) ? t.truncation : t.truncation - t.beta;
  Scalar hi_wide = (m % 2 == 0) ? t.truncation + t.beta : t.truncation;
  bool past = beyond_guard(m, p);
  if (!t.beta_next.is_nan() && t.beta_next > t.beta) past = true;
  return finish(target, p, m, t.truncation, lo_wide, hi_wide, past, ctx.env);
}

}  // namespace

ExpansionResult h_expansion(std::int64_t n, int m, const Context& ctx) {
  check_point(n, "h_expansion");
  if (m < 1) throw std::invalid_argument("h_expansion: m must be >= 1");
  check_depth_available(m, ctx, "h_expansion");
  const mpfr_prec_t wide = ctx.env.prec() + kGuardBits;

  const Scalar base = Scalar::integer(n, wide);
  Scalar trunc = log(base) + ctx.env.euler_gamma().rounded_to(wide) +
                 Scalar::ratio(1, 2 * n, wide);
  const Scalar n_sq = base * base;
  Scalar n_pow = Scalar::integer(1, wide);
  for (int k = 1; k <= m - 1; ++k) {
    n_pow *= n_sq;
    trunc -= ctx.bernoulli(k) / (n_pow * (2 * k));
  }
  n_pow *= n_sq;
  ParityTerms t{trunc, abs(ctx.bernoulli(m)) / (n_pow * (2 * m)), Scalar()};
  if (m + 1 <= ctx.depth()) {
    t.beta_next = abs(ctx.bernoulli(m + 1)) / (n_pow * n_sq * (2 * (m + 1)));
  }
  return parity_expansion(ExpansionTarget::Harmonic, n, m, t, ctx);
}

namespace {

// c- and d-limits share one shape: base - sum b_{2k} w(2k) / (2k p^{2k}) with
// w = zeta (c) or eta (d), and remainder bound |b_{2m}| w(2m)/(2m p^{2m}).
ExpansionResult weighted_expansion(ExpansionTarget target, std::int64_t p,
                                   int m, const Context& ctx, bool use_eta,
                                   const char* who) {
  check_point(p, who);
  if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be >= 1");
  check_depth_available(m, ctx, who);
  const mpfr_prec_t wide = ctx.env.prec() + kGuardBits;

  Scalar trunc = use_eta
                     ? ctx.env.ln2().rounded_to(wide) / (2 * p)
                     : Scalar::zero(wide);
  const Scalar p_sq = pow_int(Scalar::integer(p, wide), 2);
  Scalar p_pow = Scalar::integer(1, wide);
  for (int k = 1; k <= m - 1; ++k) {
    p_pow *= p_sq;
    const Scalar& w = use_eta ? ctx.eta_even(k) : ctx.zeta_even(k);
    trunc -= ctx.bernoulli(k) * w / (p_pow * (2 * k));
  }
  p_pow *= p_sq;
  const Scalar& wm = use_eta ? ctx.eta_even(m) : ctx.zeta_even(m);
  ParityTerms t{trunc, abs(ctx.bernoulli(m)) * wm / (p_pow * (2 * m)),
                Scalar()};
  if (m + 1 <= ctx.depth()) {
    const Scalar& wn = use_eta ? ctx.eta_even(m + 1) : ctx.zeta_even(m + 1);
    t.beta_next =
        abs(ctx.bernoulli(m + 1)) * wn / (p_pow * p_sq * (2 * (m + 1)));
  }
  return parity_expansion(target, p, m, t, ctx);
}

// The two bracket expansions of the trigonometric sums share their tail
// shape: main + sum_k (-1)^k coef_k ratio^{2k-...}; 2n terms overshoot, one
// more term undershoots.
struct SumBracket {
  Scalar upper;      // main + 2n terms
  Scalar lower;      // main + 2n+1 terms
  Scalar width_next; // |term_{2n+3}| (NaN when the tables end sooner)
};

}  // namespace

ExpansionResult c_expansion(std::int64_t p, int m, const Context& ctx) {
  return weighted_expansion(ExpansionTarget::CSeries, p, m, ctx, false,
                            "c_expansion");
}

ExpansionResult d_expansion(std::int64_t p, int m, const Context& ctx) {
  return weighted_expansion(ExpansionTarget::DSeries, p, m, ctx, true,
                            "d_expansion");
}

namespace {

// term_k for the cosecant bracket: (-1)^k (2^{2k}-2) b_{2k}^2/(k (2k)!)
// (pi/p)^{2k-1}; for the cotangent bracket: 2pi (-1)^k b_{2k}^2/(k (2k)!)
// (2pi/p)^{2k-2}.
SumBracket sum_bracket(std::int64_t p, int n, const Context& ctx,
                       bool cosecant, const Scalar& main) {
  const mpfr_prec_t wide = main.precision();
  const Scalar pi = ctx.env.pi().rounded_to(wide);
  const Scalar base = cosecant ? pi / p : (pi * 2) / p;
  const Scalar base_sq = base * base;
  Scalar power = cosecant ? base : Scalar::integer(1, wide);

  mpz_t fact;
  mpz_init_set_ui(fact, 1);
  Scalar acc = main;
  SumBracket out{main, Scalar(), Scalar()};
  const int last = 2 * n + 1;
  for (int k = 1; k <= last + 2 && k <= ctx.depth(); ++k) {
    mpz_mul_ui(fact, fact, 2 * static_cast<unsigned long>(k) - 1);
    mpz_mul_ui(fact, fact, 2 * static_cast<unsigned long>(k));
    Scalar fact_s(wide);
    mpfr_set_z(fact_s.raw(), fact, MPFR_RNDN);

    const Scalar& b = ctx.bernoulli(k);
    Scalar coef = b * b / (fact_s * k);
    if (cosecant) {
      coef *= pow_int(Scalar::integer(2, wide), 2 * k) - 2;
    } else {
      coef *= pi * 2;
    }
    Scalar term = coef * power;
    if (k % 2 == 1) term = -term;
    power *= base_sq;

    if (k <= last) acc += term;
    if (k == last - 1) out.upper = acc;
    if (k == last) out.lower = acc;
    if (k == last + 2) out.width_next = abs(term);
  }
  mpz_clear(fact);
  return out;
}

ExpansionResult trig_bracket_expansion(ExpansionTarget target, std::int64_t p,
                                       int n, const Context& ctx,
                                       bool cosecant, const char* who) {
  check_point(p, who);
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
  check_depth_available(2 * n + 1, ctx, who);
  const mpfr_prec_t wide = ctx.env.prec() + kGuardBits;

  const Scalar pi = ctx.env.pi().rounded_to(wide);
  const Scalar gamma = ctx.env.euler_gamma().rounded_to(wide);
  const Scalar lnp = log(Scalar::integer(p, wide));
  Scalar main(wide);
  if (cosecant) {
    main = (lnp + gamma - ctx.env.ln_pi_over_2().rounded_to(wide)) * (2 * p) / pi;
  } else {
    const Scalar p_sq = pow_int(Scalar::integer(p, wide), 2);
    main = (-(p_sq * lnp) + (ctx.env.ln_2pi().rounded_to(wide) - gamma) * p_sq -
            Scalar::integer(p, wide)) /
           pi;
  }

  SumBracket br = sum_bracket(p, n, ctx, cosecant, main);
  bool past = beyond_guard(2 * n + 1, p);
  Scalar width = br.upper - br.lower;
  if (!br.width_next.is_nan() && br.width_next > width) past = true;
  return finish(target, p, n, br.upper, br.lower, br.upper, past, ctx.env);
}

}  // namespace

ExpansionResult i_expansion(std::int64_t p, int n, const Context& ctx) {
  return trig_bracket_expansion(ExpansionTarget::CosecantSum, p, n, ctx, true,
                                "i_expansion");
}

ExpansionResult j_expansion(std::int64_t p, int n, const Context& ctx) {
  return trig_bracket_expansion(ExpansionTarget::CotangentSum, p, n, ctx,
                                false, "j_expansion");
}

Scalar j_harmonic_residual(std::int64_t p, const ScalarEnv& env) {
  check_point(p, "j_harmonic_residual");
  HarmonicAccumulator acc(env);
  acc.advance_to(p);
  return j_harmonic_residual(p, cotangent_sum(p, env), acc.value(), env);
}

Scalar j_harmonic_residual(std::int64_t p, const Scalar& cotangent_value,
                           const Scalar& harmonic_value, const ScalarEnv& env) {
  check_point(p, "j_harmonic_residual");
  const mpfr_prec_t wide = env.prec() + kGuardBits;
  const Scalar jp = cotangent_value.rounded_to(wide);
  const Scalar p_sq = pow_int(Scalar::integer(p, wide), 2);
  Scalar theta = -(env.pi().rounded_to(wide) * jp) -
                 p_sq * harmonic_value.rounded_to(wide) +
                 env.ln_2pi().rounded_to(wide) * p_sq -
                 Scalar::ratio(p, 2, wide);
  return theta.rounded_to(env.prec());
}

}  // namespace trigsum
