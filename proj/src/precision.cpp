#include "trigsum/precision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trigsum/detail/bernoulli_rational.hpp"
#include "trigsum/errors.hpp"

namespace trigsum {

static_assert(sizeof(long) >= 8, "the library requires 64-bit long");

namespace {
long asl(std::int64_t v) { return static_cast<long>(v); }
}  // namespace

mpfr_prec_t PrecisionPolicy::precision_bits() const {
  return static_cast<mpfr_prec_t>(
      std::ceil((working_digits + 8) * 3.3219280948873626));
}

void PrecisionPolicy::validate() const {
  if (working_digits < 15 || working_digits > 120) {
    throw std::invalid_argument(
        "precision policy: working_digits must be in [15, 120]");
  }
  if (check_margin < 1 || check_margin >= working_digits) {
    throw std::invalid_argument(
        "precision policy: check_margin must be in [1, working_digits)");
  }
}

Scalar::Scalar() {
  mpfr_init2(value_, 64);
  mpfr_set_nan(value_);
}

Scalar::Scalar(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_nan(value_);
}

Scalar::Scalar(const Scalar& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Scalar::Scalar(Scalar&& other) noexcept {
  mpfr_init2(value_, 64);
  mpfr_swap(value_, other.value_);
}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Scalar& Scalar::operator=(Scalar&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Scalar::~Scalar() { mpfr_clear(value_); }

Scalar Scalar::zero(mpfr_prec_t prec) {
  Scalar s(prec);
  mpfr_set_zero(s.value_, 1);
  return s;
}

Scalar Scalar::integer(std::int64_t value, mpfr_prec_t prec) {
  Scalar s(prec);
  mpfr_set_si(s.value_, asl(value), MPFR_RNDN);
  return s;
}

Scalar Scalar::ratio(std::int64_t num, std::int64_t den, mpfr_prec_t prec) {
  if (den == 0) throw std::invalid_argument("Scalar::ratio: zero denominator");
  Scalar s(prec);
  mpfr_set_si(s.value_, asl(num), MPFR_RNDN);
  mpfr_div_si(s.value_, s.value_, asl(den), MPFR_RNDN);
  return s;
}

Scalar Scalar::pow10(std::int64_t exponent, mpfr_prec_t prec) {
  Scalar s(prec);
  mpfr_set_si(s.value_, 10, MPFR_RNDN);
  mpfr_pow_si(s.value_, s.value_, asl(exponent), MPFR_RNDN);
  return s;
}

std::string Scalar::to_string(int significant_digits) const {
  int digits = std::max(significant_digits, 2);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Scalar::to_display_string(int significant_digits) const {
  int digits = std::max(significant_digits, 2);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Scalar Scalar::rounded_to(mpfr_prec_t prec) const {
  Scalar s(prec);
  mpfr_set(s.value_, value_, MPFR_RNDN);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& rhs) {
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Scalar& Scalar::operator+=(std::int64_t rhs) {
  mpfr_add_si(value_, value_, asl(rhs), MPFR_RNDN);
  return *this;
}
Scalar& Scalar::operator*=(std::int64_t rhs) {
  mpfr_mul_si(value_, value_, asl(rhs), MPFR_RNDN);
  return *this;
}
Scalar& Scalar::operator/=(std::int64_t rhs) {
  mpfr_div_si(value_, value_, asl(rhs), MPFR_RNDN);
  return *this;
}

namespace {
mpfr_prec_t join_prec(const Scalar& a, const Scalar& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r(join_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r(join_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r(join_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar r(join_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Scalar operator-(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Scalar operator+(const Scalar& a, std::int64_t b) {
  Scalar r(a.precision());
  mpfr_add_si(r.raw(), a.raw(), asl(b), MPFR_RNDN);
  return r;
}
Scalar operator-(const Scalar& a, std::int64_t b) {
  Scalar r(a.precision());
  mpfr_sub_si(r.raw(), a.raw(), asl(b), MPFR_RNDN);
  return r;
}
Scalar operator*(const Scalar& a, std::int64_t b) {
  Scalar r(a.precision());
  mpfr_mul_si(r.raw(), a.raw(), asl(b), MPFR_RNDN);
  return r;
}
Scalar operator/(const Scalar& a, std::int64_t b) {
  if (b == 0) throw std::invalid_argument("Scalar: division by zero integer");
  Scalar r(a.precision());
  mpfr_div_si(r.raw(), a.raw(), asl(b), MPFR_RNDN);
  return r;
}
Scalar operator+(std::int64_t a, const Scalar& b) { return b + a; }
Scalar operator-(std::int64_t a, const Scalar& b) {
  Scalar r(b.precision());
  mpfr_si_sub(r.raw(), asl(a), b.raw(), MPFR_RNDN);
  return r;
}
Scalar operator*(std::int64_t a, const Scalar& b) { return b * a; }
Scalar operator/(std::int64_t a, const Scalar& b) {
  Scalar r(b.precision());
  mpfr_si_div(r.raw(), asl(a), b.raw(), MPFR_RNDN);
  return r;
}

bool operator<(const Scalar& a, const Scalar& b) {
  return mpfr_less_p(a.raw(), b.raw()) != 0;
}
bool operator>(const Scalar& a, const Scalar& b) {
  return mpfr_greater_p(a.raw(), b.raw()) != 0;
}
bool operator<=(const Scalar& a, const Scalar& b) {
  return mpfr_lessequal_p(a.raw(), b.raw()) != 0;
}
bool operator>=(const Scalar& a, const Scalar& b) {
  return mpfr_greaterequal_p(a.raw(), b.raw()) != 0;
}
bool operator==(const Scalar& a, const Scalar& b) {
  return mpfr_equal_p(a.raw(), b.raw()) != 0;
}
bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

Scalar abs(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Scalar sqrt(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Scalar log(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Scalar exp(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Scalar sin(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Scalar cos(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Scalar tan(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_tan(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Scalar pow_int(const Scalar& base, std::int64_t exponent) {
  Scalar r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), asl(exponent), MPFR_RNDN);
  return r;
}

Scalar next_above(Scalar a) {
  mpfr_nextabove(a.raw());
  return a;
}
Scalar next_below(Scalar a) {
  mpfr_nextbelow(a.raw());
  return a;
}

Scalar compute_gamma(const PrecisionPolicy& policy) {
  policy.validate();
  const int wd = policy.working_digits;
  const mpfr_prec_t wide = policy.precision_bits() + 64;

  // Deeper remainder coefficients buy a smaller usable n; pick the table
  // depth from the digit demand, then the smallest power-of-two n whose best
  // remainder bound clears the target.
  const int k_max = wd <= 40 ? 16 : (wd <= 80 ? 32 : 64);
  const std::vector<Scalar> bern = detail::bernoulli_even_scalars(k_max, wide);
  const Scalar target = Scalar::pow10(-(wd + 6), wide);

  std::int64_t n = 32;
  int m_used = 0;
  while (true) {
    const Scalar base = Scalar::integer(n, wide);
    int best_m = 0;
    Scalar best_bound(wide);
    for (int m = 4; m <= k_max; m += 4) {
      Scalar bound = abs(bern[m - 1]) / (pow_int(base, 2 * m) * (2 * m));
      if (best_m == 0 || bound < best_bound) {
        best_m = m;
        best_bound = bound;
      }
    }
    if (best_bound <= target) {
      m_used = best_m;
      break;
    }
    n *= 2;
    if (n > (std::int64_t{1} << 22)) {
      throw precision_error("compute_gamma: remainder bound not attainable");
    }
  }

  Scalar h(wide);
  mpfr_set_zero(h.raw(), 1);
  for (std::int64_t k = 1; k <= n; ++k) {
    Scalar term(wide);
    mpfr_set_si(term.raw(), 1, MPFR_RNDN);
    mpfr_div_si(term.raw(), term.raw(), asl(k), MPFR_RNDN);
    h += term;
  }

  const Scalar base = Scalar::integer(n, wide);
  Scalar estimate = h - log(base) - Scalar::ratio(1, 2 * n, wide);
  const Scalar n_sq = base * base;
  Scalar power = Scalar::integer(1, wide);
  for (int k = 1; k <= m_used - 1; ++k) {
    power *= n_sq;
    estimate += bern[k - 1] / (power * (2 * k));
  }
  return estimate.rounded_to(policy.precision_bits());
}

ScalarEnv::ScalarEnv(PrecisionPolicy policy) : policy_(policy) {
  policy_.validate();
  prec_ = policy_.precision_bits();
  constants_.pi = Scalar(prec_);
  mpfr_const_pi(constants_.pi.raw(), MPFR_RNDN);
  constants_.ln2 = Scalar(prec_);
  mpfr_const_log2(constants_.ln2.raw(), MPFR_RNDN);
  constants_.ln_pi_over_2 = log(constants_.pi / 2);
  constants_.ln_2pi = log(constants_.pi * 2);
  constants_.euler_gamma = compute_gamma(policy_);
}

Scalar ScalarEnv::tolerance_floor() const {
  return Scalar::pow10(policy_.check_margin - policy_.working_digits, prec_);
}

bool equal_within(const Scalar& a, const Scalar& b, const Scalar& tol) {
  return abs(a - b) <= tol;
}

}  // namespace trigsum
