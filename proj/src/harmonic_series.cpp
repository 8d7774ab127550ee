#include "trigsum/harmonic_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

constexpr mpfr_prec_t kAccumGuardBits = 32;

void check_positive(std::int64_t p, const char* who) {
  if (p < 1) {
    throw std::invalid_argument(std::string(who) +
                                ": p must be a positive integer");
  }
}

// Requested tolerances below the policy floor cannot be certified at the
// working precision.
Scalar checked_tolerance(double tol, const ScalarEnv& env, const char* who) {
  if (!(tol > 0)) {
    throw std::invalid_argument(std::string(who) + ": tolerance must be > 0");
  }
  Scalar tol_s(env.prec());
  mpfr_set_d(tol_s.raw(), tol, MPFR_RNDN);
  if (tol_s < env.tolerance_floor()) {
    throw precision_error(std::string(who) + ": tolerance " +
                          std::to_string(tol) +
                          " is below the precision policy floor");
  }
  return tol_s;
}

// Smallest N (>= 8) with coef * N^{1-2m} / (2m-1) <= tol/2, i.e. the head
// length that pushes the zeta-tail remainder under half the tolerance;
// evaluated in logs to dodge overflow.  Returns N and the remainder order m.
struct HeadChoice {
  int m = 0;
  std::int64_t n = 0;
};

HeadChoice pick_head(std::int64_t p, double tol, const Context& ctx,
                     bool alternating) {
  HeadChoice best;
  const double log_p = std::log(static_cast<double>(p));
  for (int m = 2; m <= ctx.depth(); ++m) {
    const double log_coef =
        std::log(std::fabs(ctx.bernoulli(m).to_double())) -
        std::log(2.0 * m) - 2.0 * m * log_p;
    double log_n;
    if (alternating) {
      // remainder <= coef / (N+1)^{2m}
      log_n = (log_coef - std::log(tol / 2)) / (2.0 * m);
    } else {
      // remainder <= coef * N^{1-2m} / (2m-1)
      log_n = (log_coef - std::log(2.0 * m - 1) - std::log(tol / 2)) /
              (2.0 * m - 1);
    }
    std::int64_t n = 8;
    if (log_n > std::log(8.0)) {
      if (log_n > 43.0) continue;  // would not fit the step counter
      n = static_cast<std::int64_t>(std::ceil(std::exp(log_n))) + 1;
    }
    if (best.m == 0 || n < best.n) best = HeadChoice{m, n};
  }
  if (best.m == 0) {
    throw budget_error("series: no feasible head length at this tolerance");
  }
  return best;
}

}  // namespace

HarmonicAccumulator::HarmonicAccumulator(const ScalarEnv& env)
    : h_(Scalar::zero(env.prec() + kAccumGuardBits)) {}

void HarmonicAccumulator::advance_to(std::int64_t n) {
  if (n < n_) {
    throw std::invalid_argument("HarmonicAccumulator: cannot rewind");
  }
  for (std::int64_t k = n_ + 1; k <= n; ++k) {
    Scalar term = Scalar::integer(1, h_.precision());
    term /= k;
    h_ += term;
  }
  n_ = n;
}

Scalar harmonic(std::int64_t n, const ScalarEnv& env) {
  if (n < 0) throw std::invalid_argument("harmonic: n must be >= 0");
  HarmonicAccumulator acc(env);
  acc.advance_to(n);
  return acc.value().rounded_to(env.prec());
}

Scalar c_term(std::int64_t n, const ScalarEnv& env) {
  check_positive(n, "c_term");
  HarmonicAccumulator acc(env);
  acc.advance_to(n);
  Scalar ln_n = log(Scalar::integer(n, env.prec()));
  return (acc.value() - ln_n - env.euler_gamma() -
          Scalar::ratio(1, 2 * n, env.prec()))
      .rounded_to(env.prec());
}

Scalar d_term(std::int64_t n, const ScalarEnv& env) {
  check_positive(n, "d_term");
  HarmonicAccumulator acc(env);
  acc.advance_to(n);
  Scalar ln_n = log(Scalar::integer(n, env.prec()));
  return (acc.value() - ln_n - env.euler_gamma()).rounded_to(env.prec());
}

namespace {

// Shared head-plus-corrected-tail evaluation for the c- and d-series.
SeriesResult corrected_series(std::int64_t p, double tol, const Context& ctx,
                              std::int64_t max_steps, bool alternating,
                              const char* who) {
  check_positive(p, who);
  const ScalarEnv& env = ctx.env;
  const Scalar tol_s = checked_tolerance(tol, env, who);
  const HeadChoice head = pick_head(p, tol, ctx, alternating);
  const int m = head.m;
  const std::int64_t n_head = head.n;
  if (p > max_steps / n_head) {
    throw budget_error(std::string(who) + ": head needs " +
                       std::to_string(n_head) + " terms of stride " +
                       std::to_string(p) + ", over the step budget " +
                       std::to_string(max_steps));
  }

  const mpfr_prec_t wide = env.prec() + kAccumGuardBits;
  HarmonicAccumulator h(env);
  Scalar sum_head = Scalar::zero(wide);
  // power_sums[k-1] accumulates sum over the head of (+/-) n^{-2k}.
  std::vector<Scalar> power_sums(static_cast<size_t>(m), Scalar::zero(wide));
  const Scalar& gamma = env.euler_gamma();

  for (std::int64_t n = 1; n <= n_head; ++n) {
    h.advance_to(p * n);
    Scalar ln_pn = log(Scalar::integer(p * n, wide));
    Scalar term =
        h.value() - ln_pn - gamma - Scalar::ratio(1, 2 * p * n, wide);
    const bool negate = alternating && n % 2 == 0;
    sum_head += negate ? -term : term;
    Scalar inv_sq = Scalar::ratio(1, n, wide);
    inv_sq *= inv_sq;
    Scalar weight = Scalar::integer(1, wide);
    for (int k = 1; k <= m; ++k) {
      weight *= inv_sq;
      power_sums[static_cast<size_t>(k - 1)] += negate ? -weight : weight;
    }
  }

  // Tail of sum c_{pn} via the expansion of c: each omitted term contributes
  // -b_{2k}/(2k (pn)^{2k}) plus a remainder of order 2m.
  Scalar correction = Scalar::zero(wide);
  const Scalar p_sq = pow_int(Scalar::integer(p, wide), 2);
  Scalar p_pow = Scalar::integer(1, wide);
  for (int k = 1; k <= m - 1; ++k) {
    p_pow *= p_sq;
    const Scalar& full = alternating ? ctx.eta_even(k) : ctx.zeta_even(k);
    correction -=
        ctx.bernoulli(k) / (p_pow * (2 * k)) *
        (full - power_sums[static_cast<size_t>(k - 1)]);
  }
  p_pow *= p_sq;  // p^{2m}

  Scalar bound(wide);
  if (alternating) {
    // Alternating remainders decrease in magnitude, so the tail is below its
    // first element.
    bound = abs(ctx.bernoulli(m)) / (p_pow * (2 * m));
    bound /= pow_int(Scalar::integer(n_head + 1, wide), 2 * m);
  } else {
    bound = abs(ctx.bernoulli(m)) / (p_pow * (2 * m)) *
            (ctx.zeta_even(m) - power_sums[static_cast<size_t>(m - 1)]);
  }

  Scalar value = sum_head + correction;
  if (alternating) {
    value += env.ln2().rounded_to(wide) / (2 * p);
  }
  if (bound > tol_s) {
    throw budget_error(std::string(who) +
                       ": certified tail bound exceeds the tolerance");
  }
  return SeriesResult{value.rounded_to(env.prec()),
                      bound.rounded_to(env.prec()), n_head};
}

}  // namespace

SeriesResult c_series(std::int64_t p, double tol, const Context& ctx,
                      std::int64_t max_steps) {
  return corrected_series(p, tol, ctx, max_steps, false, "c_series");
}

SeriesResult d_series(std::int64_t p, double tol, const Context& ctx,
                      std::int64_t max_steps) {
  return corrected_series(p, tol, ctx, max_steps, true, "d_series");
}

SeriesResult e_series(std::int64_t p, double tol, const ScalarEnv& env,
                      std::int64_t max_steps) {
  check_positive(p, "e_series");
  const Scalar tol_s = checked_tolerance(tol, env, "e_series");
  const mpfr_prec_t wide = env.prec() + kAccumGuardBits;

  std::vector<Scalar> block;  // block[n] = H_{p(n+1)} - H_{pn}
  std::vector<Scalar> partial;

  constexpr std::int64_t kMaxRows = 2048;
  if (2 * p > max_steps) {
    throw budget_error("e_series: stride " + std::to_string(p) +
                       " cannot afford two terms within the step budget");
  }
  std::int64_t rows = std::min<std::int64_t>(64, std::max<std::int64_t>(max_steps / p, 2));

  Scalar best_lo(wide), best_hi(wide), best_width(wide);

  while (true) {
    while (static_cast<std::int64_t>(block.size()) < rows) {
      const auto n = static_cast<std::int64_t>(block.size());
      Scalar t = Scalar::zero(wide);
      for (std::int64_t i = p * n + 1; i <= p * (n + 1); ++i) {
        Scalar term = Scalar::integer(1, wide);
        term /= i;
        t += term;
      }
      block.push_back(std::move(t));
    }

    partial.clear();
    partial.reserve(block.size());
    Scalar acc = Scalar::zero(wide);
    for (size_t n = 0; n < block.size(); ++n) {
      if (n % 2 == 0) {
        acc += block[n];
      } else {
        acc -= block[n];
      }
      partial.push_back(acc);
    }

    // Raw bracket: even-indexed partial sums sit above the limit, odd ones
    // below; repeated adjacent averaging preserves that enclosure while
    // tightening it geometrically.
    best_lo = partial[1];
    best_hi = partial[0];
    best_width = best_hi - best_lo;
    std::vector<Scalar> row = partial;
    while (row.size() > 1) {
      for (size_t i = 0; i + 1 < row.size(); ++i) {
        row[i] = (row[i] + row[i + 1]) / 2;
      }
      row.pop_back();
      if (row.size() < 2) break;
      const size_t i = row.size() - 2;
      Scalar lo = (i % 2 == 0) ? row[i + 1] : row[i];
      Scalar hi = (i % 2 == 0) ? row[i] : row[i + 1];
      if (hi >= lo && hi - lo < best_width) {
        best_lo = lo;
        best_hi = hi;
        best_width = best_hi - best_lo;
      }
    }

    // Cover accumulated rounding drift in the averaging triangle: each row
    // adds at most one rounding step per entry.
    Scalar noise = abs(partial[0]) + 1;
    noise *= static_cast<std::int64_t>(block.size());
    mpfr_mul_2si(noise.raw(), noise.raw(), -(static_cast<long>(wide) - 4),
                 MPFR_RNDN);
    best_lo -= noise;
    best_hi += noise;
    best_width = best_hi - best_lo;

    if (best_width <= tol_s) break;
    if (rows >= kMaxRows || (rows * 2) * p > max_steps) {
      throw budget_error(
          "e_series: bracket width " + best_width.to_string(3) +
          " still above tolerance with " + std::to_string(rows) +
          " rows (budget " + std::to_string(max_steps) + " steps)");
    }
    rows *= 2;
  }

  Scalar value = (best_lo + best_hi) / 2;
  return SeriesResult{value.rounded_to(env.prec()),
                      best_width.rounded_to(env.prec()),
                      static_cast<std::int64_t>(block.size())};
}

}  // namespace trigsum
