#ifndef TRIGSUM_PRECISION_HPP
#define TRIGSUM_PRECISION_HPP

#include <mpfr.h>

#include <concepts>
#include <cstdint>
#include <string>

namespace trigsum {

// Governs every numeric computation in the library.  `working_digits` is the
// number of decimal digits carried by all scalars; `check_margin` sets the
// floor 10^(check_margin - working_digits) below which comparisons and
// certified tolerances are not allowed to go.
struct PrecisionPolicy {
  int working_digits = 30;
  int check_margin = 5;

  // Binary precision used for scalars: ceil((working_digits + 8) * log2(10)).
  mpfr_prec_t precision_bits() const;

  // Throws std::invalid_argument unless 15 <= working_digits <= 120 and
  // 1 <= check_margin < working_digits.
  void validate() const;
};

// Immutable arbitrary-precision real number (MPFR-backed, round-to-nearest).
// Copy preserves both value and precision exactly; arithmetic between two
// scalars rounds once into the wider of the two operand precisions.
class Scalar {
 public:
  Scalar();
  explicit Scalar(mpfr_prec_t prec);
  Scalar(const Scalar& other);
  Scalar(Scalar&& other) noexcept;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&& other) noexcept;
  ~Scalar();

  static Scalar zero(mpfr_prec_t prec);
  static Scalar integer(std::int64_t value, mpfr_prec_t prec);
  static Scalar ratio(std::int64_t num, std::int64_t den, mpfr_prec_t prec);
  static Scalar pow10(std::int64_t exponent, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // Scientific notation with the given number of significant digits
  // (deterministic; used for reports and round-trips).
  std::string to_string(int significant_digits) const;
  // Positional notation where reasonable (used for human-facing output).
  std::string to_display_string(int significant_digits) const;

  // Value rounded once into a different precision.
  Scalar rounded_to(mpfr_prec_t prec) const;

  // In-place arithmetic keeps the precision of *this (the accumulator idiom:
  // an accumulator wider than its terms absorbs each addition with one
  // rounding at the wide precision).
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar& operator+=(std::int64_t rhs);
  Scalar& operator*=(std::int64_t rhs);
  Scalar& operator/=(std::int64_t rhs);

  // Floating-point operands would be silently truncated by the integer
  // overloads; reject them at compile time (set through mpfr on raw()
  // instead, which makes the single rounding explicit).
  Scalar& operator+=(std::floating_point auto) = delete;
  Scalar& operator-=(std::floating_point auto) = delete;
  Scalar& operator*=(std::floating_point auto) = delete;
  Scalar& operator/=(std::floating_point auto) = delete;

 private:
  mpfr_t value_;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);

Scalar operator+(const Scalar& a, std::int64_t b);
Scalar operator-(const Scalar& a, std::int64_t b);
Scalar operator*(const Scalar& a, std::int64_t b);
Scalar operator/(const Scalar& a, std::int64_t b);
Scalar operator+(std::int64_t a, const Scalar& b);
Scalar operator-(std::int64_t a, const Scalar& b);
Scalar operator*(std::int64_t a, const Scalar& b);
Scalar operator/(std::int64_t a, const Scalar& b);

// Same compile-time rejection for free operators mixing in a double.
Scalar operator+(const Scalar&, std::floating_point auto) = delete;
Scalar operator-(const Scalar&, std::floating_point auto) = delete;
Scalar operator*(const Scalar&, std::floating_point auto) = delete;
Scalar operator/(const Scalar&, std::floating_point auto) = delete;
Scalar operator+(std::floating_point auto, const Scalar&) = delete;
Scalar operator-(std::floating_point auto, const Scalar&) = delete;
Scalar operator*(std::floating_point auto, const Scalar&) = delete;
Scalar operator/(std::floating_point auto, const Scalar&) = delete;

bool operator<(const Scalar& a, const Scalar& b);
bool operator>(const Scalar& a, const Scalar& b);
bool operator<=(const Scalar& a, const Scalar& b);
bool operator>=(const Scalar& a, const Scalar& b);
bool operator==(const Scalar& a, const Scalar& b);
bool operator!=(const Scalar& a, const Scalar& b);

Scalar abs(const Scalar& a);
Scalar sqrt(const Scalar& a);
Scalar log(const Scalar& a);
Scalar exp(const Scalar& a);
Scalar sin(const Scalar& a);
Scalar cos(const Scalar& a);
Scalar tan(const Scalar& a);
Scalar pow_int(const Scalar& base, std::int64_t exponent);

// One representable step up / down (used to widen certified endpoints).
Scalar next_above(Scalar a);
Scalar next_below(Scalar a);

// Shared constants, all rounded at the policy's precision.
struct Constants {
  Scalar pi;
  Scalar ln2;
  Scalar ln_pi_over_2;
  Scalar ln_2pi;
  Scalar euler_gamma;
};

// Euler's constant from the harmonic-number expansion
//   H_n = ln n + gamma + 1/(2n) - sum_{k=1}^{m-1} b_{2k}/(2k n^{2k}) + remainder,
// |remainder| <= |b_{2m}|/(2m n^{2m}), with n chosen adaptively so the
// remainder bound sits below the policy's working accuracy.
Scalar compute_gamma(const PrecisionPolicy& policy);

// Owns a validated policy plus the constants; passed by const reference into
// every numeric routine.
class ScalarEnv {
 public:
  explicit ScalarEnv(PrecisionPolicy policy = PrecisionPolicy{});

  const PrecisionPolicy& policy() const { return policy_; }
  mpfr_prec_t prec() const { return prec_; }
  const Constants& constants() const { return constants_; }

  const Scalar& pi() const { return constants_.pi; }
  const Scalar& ln2() const { return constants_.ln2; }
  const Scalar& ln_pi_over_2() const { return constants_.ln_pi_over_2; }
  const Scalar& ln_2pi() const { return constants_.ln_2pi; }
  const Scalar& euler_gamma() const { return constants_.euler_gamma; }

  Scalar integer(std::int64_t value) const { return Scalar::integer(value, prec_); }
  Scalar ratio(std::int64_t num, std::int64_t den) const {
    return Scalar::ratio(num, den, prec_);
  }

  // 10^(check_margin - working_digits): the smallest tolerance any certified
  // routine may be asked for under this policy.
  Scalar tolerance_floor() const;

 private:
  PrecisionPolicy policy_;
  mpfr_prec_t prec_;
  Constants constants_;
};

// |a - b| <= tol (exact comparison on scalars).
bool equal_within(const Scalar& a, const Scalar& b, const Scalar& tol);

}  // namespace trigsum

#endif  // TRIGSUM_PRECISION_HPP
