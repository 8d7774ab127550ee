#ifndef TRIGSUM_VERIFIER_HPP
#define TRIGSUM_VERIFIER_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "trigsum/number_tables.hpp"
#include "trigsum/precision.hpp"

namespace trigsum {

// One audited claim at one expansion point.  For every check the margin is
// positive exactly when the check passed: identity checks use
// margin = tol*scale - |lhs - rhs| with scale = max(1, |lhs|, |rhs|); bound
// checks use the distance from the bounded quantity to the bound.
struct CheckRecord {
  std::string check_id;
  std::int64_t p = 0;
  bool passed = false;
  // Observational checks (asserted = false) are recorded but never gate the
  // report outcome; used where a bound is only conjectured on small p.
  bool asserted = true;
  Scalar margin;
  Scalar lhs;
  Scalar rhs;
};

struct CheckSummary {
  std::int64_t passed = 0;
  std::int64_t failed = 0;
};

struct VerificationReport {
  PrecisionPolicy policy;
  double tolerance = 0.0;
  std::vector<CheckRecord> records;                // sorted by (check_id, p)
  std::map<std::string, CheckSummary> summary;     // per check_id

  void add(CheckRecord record);
  // Sort records by (check_id, p) and rebuild the summary; emit and the
  // pass/fail accessors expect a finalized report.
  void finalize();
  bool all_asserted_passed() const;
  // Absorb another report's records (both get re-finalized).
  void merge(VerificationReport other);
};

// Audits, for each p in [p_from, p_to], every closed-form identity between
// the trigonometric sums and the harmonic-series limits:
//   lemma31_i_tan     tangent half-angle sum equals the cosecant sum
//   lemma31_i_cot     cotangent half-angle sum equals the cosecant sum
//   lemma31_ii        twice the weighted cosecant sum equals p * cosecant sum
//   lemma31_iii_a     odd cotangent sum equals J_{2p} - 2 J_p
//   lemma31_iii_b     odd cotangent sum equals -p * cosecant sum
//   secant2/secant4   secant power sums equal their rational closed forms
//   kou               odd-denominator secant sum equals its integer value
//   lemma24           e-series equals ln p + gamma - ln(pi/2) + 2 d-series
//   prop32            cosecant sum equals -2 ln2/pi + (2p/pi) e-series
//   prop36            pi J_p equals -p^2 ln p + (ln 2pi - gamma) p^2 - p
//                     + 2 p^2 c-series
//   remark39_C/D/E    the three series-to-sum bridges
// Series sides are evaluated with certified tolerance tol/10; the comparison
// allowance is tol scaled by max(1, |lhs|, |rhs|).
VerificationReport verify_identities(std::int64_t p_from, std::int64_t p_to,
                                     double tol, const Context& ctx);

// Audits, for each p in [p_from, p_to], the two-sided expansion brackets of
// the cosecant and cotangent sums at each requested bracket level n
// (cor34_lower_n<n> / cor34_upper_n<n> / cor38_lower_n<n> / cor38_upper_n<n>)
// plus the residual bound 0 < theta_p < 1 (lemma35_theta_pos/lt1).  The
// level-0 upper cosecant bound is asserted for p >= 3 and recorded
// observationally as chen_small_p for p in {1, 2}.
VerificationReport verify_bounds(std::int64_t p_from, std::int64_t p_to,
                                 const std::vector<int>& levels,
                                 const Context& ctx);

enum class ReportFormat { Csv, Json };

// Writes a finalized report deterministically: identical reports produce
// byte-identical output.  CSV columns: check_id,p,passed,margin,lhs,rhs.
void emit_report(const VerificationReport& report, ReportFormat format,
                 std::ostream& os);

}  // namespace trigsum

#endif  // TRIGSUM_VERIFIER_HPP
