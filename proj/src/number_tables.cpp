#include "trigsum/number_tables.hpp"

#include <gmp.h>

#include <stdexcept>
#include <string>

#include "trigsum/detail/bernoulli_rational.hpp"
#include "trigsum/errors.hpp"

namespace trigsum {

BernoulliTable::BernoulliTable(const ScalarEnv& env, int depth) {
  if (depth < 1 || depth > 64) {
    throw std::invalid_argument("BernoulliTable: depth must be in [1, 64]");
  }
  values_ = detail::bernoulli_even_scalars(depth, env.prec());
}

const Scalar& BernoulliTable::at(int k) const {
  if (k < 1 || k > depth()) {
    throw capacity_error("BernoulliTable: index " + std::to_string(k) +
                         " outside table depth " + std::to_string(depth()));
  }
  return values_[static_cast<size_t>(k - 1)];
}

EvenZetaTable::EvenZetaTable(const ScalarEnv& env,
                             const BernoulliTable& bernoulli) {
  const mpfr_prec_t prec = env.prec();
  const int depth = bernoulli.depth();
  zeta_.reserve(depth);
  eta_.reserve(depth);

  const Scalar two_pi_sq = (env.pi() * 2) * (env.pi() * 2);
  Scalar power = Scalar::integer(1, prec);  // (2*pi)^{2k}, built iteratively
  mpz_t fact;                               // (2k)!, exact
  mpz_init_set_ui(fact, 1);

  for (int k = 1; k <= depth; ++k) {
    power *= two_pi_sq;
    mpz_mul_ui(fact, fact, 2 * static_cast<unsigned long>(k) - 1);
    mpz_mul_ui(fact, fact, 2 * static_cast<unsigned long>(k));
    Scalar fact_s(prec);
    mpfr_set_z(fact_s.raw(), fact, MPFR_RNDN);

    Scalar z = power * abs(bernoulli.at(k)) / (fact_s * 2);
    Scalar half_pow = Scalar::integer(1, prec);  // 2^{1-2k}, exact
    mpfr_mul_2si(half_pow.raw(), half_pow.raw(), 1 - 2 * k, MPFR_RNDN);
    eta_.push_back((1 - half_pow) * z);
    zeta_.push_back(std::move(z));
  }
  mpz_clear(fact);
}

const Scalar& EvenZetaTable::zeta(int k) const {
  if (k < 1 || k > depth()) {
    throw capacity_error("EvenZetaTable: index " + std::to_string(k) +
                         " outside table depth " + std::to_string(depth()));
  }
  return zeta_[static_cast<size_t>(k - 1)];
}

const Scalar& EvenZetaTable::eta(int k) const {
  if (k < 1 || k > depth()) {
    throw capacity_error("EvenZetaTable: index " + std::to_string(k) +
                         " outside table depth " + std::to_string(depth()));
  }
  return eta_[static_cast<size_t>(k - 1)];
}

}  // namespace trigsum
