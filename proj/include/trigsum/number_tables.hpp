#ifndef TRIGSUM_NUMBER_TABLES_HPP
#define TRIGSUM_NUMBER_TABLES_HPP

#include <vector>

#include "trigsum/precision.hpp"

namespace trigsum {

// Even-indexed Bernoulli numbers b_2 .. b_{2*depth}, exact rationals rounded
// once into the environment's precision.  Signs alternate starting positive:
// b_2 = 1/6, b_4 = -1/30, ...
class BernoulliTable {
 public:
  static constexpr int kDefaultDepth = 16;

  explicit BernoulliTable(const ScalarEnv& env, int depth = kDefaultDepth);

  int depth() const { return static_cast<int>(values_.size()); }

  // b_{2k} for k in [1, depth]; capacity_error outside.
  const Scalar& at(int k) const;

 private:
  std::vector<Scalar> values_;
};

// zeta(2k) and eta(2k) for k in [1, depth], derived from the Bernoulli table
// through the closed forms
//   zeta(2k) = (2*pi)^{2k} |b_{2k}| / (2 * (2k)!)
//   eta(2k)  = (1 - 2^{1-2k}) * zeta(2k).
class EvenZetaTable {
 public:
  EvenZetaTable(const ScalarEnv& env, const BernoulliTable& bernoulli);

  int depth() const { return static_cast<int>(zeta_.size()); }

  // zeta(2k) / eta(2k) for k in [1, depth]; capacity_error outside.
  const Scalar& zeta(int k) const;
  const Scalar& eta(int k) const;

 private:
  std::vector<Scalar> zeta_;
  std::vector<Scalar> eta_;
};

// Borrowed view bundling the environment with both tables; the unit most
// numeric routines take as input.
struct Context {
  const ScalarEnv& env;
  const BernoulliTable& bern;
  const EvenZetaTable& zeta_table;

  const Scalar& bernoulli(int k) const { return bern.at(k); }
  const Scalar& zeta_even(int k) const { return zeta_table.zeta(k); }
  const Scalar& eta_even(int k) const { return zeta_table.eta(k); }
  int depth() const { return bern.depth(); }
};

// Owns an environment plus tables; hands out Context views.
class Workspace {
 public:
  explicit Workspace(PrecisionPolicy policy = PrecisionPolicy{},
                     int depth = BernoulliTable::kDefaultDepth)
      : env_(policy), bern_(env_, depth), zeta_(env_, bern_) {}

  const ScalarEnv& env() const { return env_; }
  Context context() const { return Context{env_, bern_, zeta_}; }

 private:
  ScalarEnv env_;
  BernoulliTable bern_;
  EvenZetaTable zeta_;
};

}  // namespace trigsum

#endif  // TRIGSUM_NUMBER_TABLES_HPP
