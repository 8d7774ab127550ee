#include "trigsum/detail/bernoulli_rational.hpp"

#include <gmp.h>

#include <cstring>
#include <stdexcept>

namespace trigsum::detail {

namespace {

// B_0 .. B_n as exact rationals (B_1 = -1/2 convention; only the evens are
// consumed by callers).
class RationalRow {
 public:
  explicit RationalRow(int n) : size_(n + 1) {
    values_ = new mpq_t[size_];
    for (int i = 0; i < size_; ++i) mpq_init(values_[i]);
    compute();
  }
  RationalRow(const RationalRow&) = delete;
  RationalRow& operator=(const RationalRow&) = delete;
  ~RationalRow() {
    for (int i = 0; i < size_; ++i) mpq_clear(values_[i]);
    delete[] values_;
  }

  mpq_srcptr at(int i) const { return values_[i]; }

 private:
  void compute() {
    mpq_set_ui(values_[0], 1, 1);
    mpq_t acc, term, binom_q;
    mpq_inits(acc, term, binom_q, nullptr);
    mpz_t binom;
    mpz_init(binom);
    for (int m = 1; m < size_; ++m) {
      mpq_set_ui(acc, 0, 1);
      for (int j = 0; j < m; ++j) {
        mpz_bin_uiui(binom, static_cast<unsigned long>(m) + 1,
                     static_cast<unsigned long>(j));
        mpq_set_z(binom_q, binom);
        mpq_mul(term, binom_q, values_[j]);
        mpq_add(acc, acc, term);
      }
      // b_m = -acc / (m + 1)
      mpq_set_si(binom_q, -1, static_cast<unsigned long>(m) + 1);
      mpq_mul(values_[m], acc, binom_q);
      mpq_canonicalize(values_[m]);
    }
    mpq_clears(acc, term, binom_q, nullptr);
    mpz_clear(binom);
  }

  int size_;
  mpq_t* values_;
};

void check_k_max(int k_max) {
  if (k_max < 1 || k_max > 64) {
    throw std::invalid_argument("bernoulli: k_max must be in [1, 64]");
  }
}

}  // namespace

std::vector<Scalar> bernoulli_even_scalars(int k_max, mpfr_prec_t prec) {
  check_k_max(k_max);
  RationalRow row(2 * k_max);
  std::vector<Scalar> out;
  out.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    Scalar s(prec);
    mpfr_set_q(s.raw(), row.at(2 * k), MPFR_RNDN);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> bernoulli_even_fractions(int k_max) {
  check_k_max(k_max);
  RationalRow row(2 * k_max);
  std::vector<std::string> out;
  out.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    char* str = mpq_get_str(nullptr, 10, row.at(2 * k));
    out.emplace_back(str);
    void (*free_fn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(str, std::strlen(str) + 1);
  }
  return out;
}

}  // namespace trigsum::detail
