#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "longrun/rational.hpp"
#include "longrun/stream.hpp"

namespace longrun {

// Five-valued comparison outcome. Incomparable is reserved for genuine
// quasi-orderings (neither direction holds, provably). Unknown is reserved
// for bounded-horizon or approximate procedures that cannot settle the
// quantifiers; exact decision procedures never return it.
enum class Verdict { StrictlyBetter, Equivalent, StrictlyWorse, Incomparable, Unknown };

const char* to_string(Verdict v);

// Strict verdicts use the standard strict part: StrictlyBetter means the weak
// relation holds left-to-right and fails right-to-left.
struct CompareWitness {
  std::optional<std::int64_t> step;         // fixed-step witness k
  std::optional<std::int64_t> stable_from;  // first T with D_T sign settled
  std::optional<std::int64_t> positive_at;  // incomparability evidence
  std::optional<std::int64_t> negative_at;
};

struct ComparisonResult {
  Verdict verdict = Verdict::Unknown;
  CompareWitness witness;
};

// True when the weak relation u >= v holds under the verdict.
inline bool relation_holds(const ComparisonResult& r) {
  return r.verdict == Verdict::StrictlyBetter || r.verdict == Verdict::Equivalent;
}

// Everything the catching-up and fixed-step decisions need, computed once.
// D_T = sum_{t<=T} (u_t - v_t). Beyond stable_from = max head length, the
// difference u_t - v_t is periodic with period P = lcm of the two periods, so
// D_{T+P} = D_T + drift with drift = P * (mu_inf(u) - mu_inf(v)). The window
// holds D_T for T in [stable_from, stable_from + P); prefix holds D_T for
// T in [0, stable_from]. The recurrence is verified at construction.
struct DifferenceProfile {
  std::int64_t stable_from = 0;
  std::int64_t period = 1;
  Rational drift;
  std::vector<Rational> window;
  std::vector<Rational> prefix;

  static DifferenceProfile build(const EpStream& u, const EpStream& v);

  // Exact D_T for any T >= 0, constant time beyond the stored tables.
  Rational diff_sum(std::int64_t T) const;

  Rational window_max_abs() const;
};

// Complete ordering by long-run average.
ComparisonResult compare_cesaro(const EpStream& u, const EpStream& v);

// u >= v iff some T* has D_T >= 0 for every T >= T*. Decided exactly from the
// DifferenceProfile: drift sign settles nonzero drift, the window settles
// drift zero, and Incomparable appears exactly when the window carries both
// signs at drift zero.
ComparisonResult compare_catching_up(const EpStream& u, const EpStream& v);

// u >= v iff some k has D_{kT} >= 0 for every T >= 1. If any k works then k*P
// works, so the search ranges over multiples of P; the reported witness is the
// minimal valid multiple (a smaller non-multiple may exist). At drift zero the
// verdict is fixed by D at the unique window index divisible by P, hence this
// criterion never returns Incomparable.
ComparisonResult compare_fixed_step(const EpStream& u, const EpStream& v);

enum class Criterion { CatchingUp, FixedStep };

// Independent oracle: scans partial sums directly up to the horizon and tests
// the defining quantifiers, never consulting the DifferenceProfile.
// Bounded-horizon semantics, documented in the implementation: a direction
// counts as settled true when no violation occurs past horizon/2, settled
// false when violations persist into the final quarter, otherwise the verdict
// is Unknown. For the fixed-step criterion a witness k beyond kmax can never
// be excluded, so unresolved searches also yield Unknown.
ComparisonResult brute_force_compare(const EpStream& u, const EpStream& v,
                                     Criterion criterion, std::int64_t horizon,
                                     int kmax = 12);

// Catching-up dominance implies fixed-step dominance (take k*P for a valid
// catching-up tail). Returns true when the implication holds for this pair.
bool check_C_implies_fixC(const EpStream& u, const EpStream& v);

}  // namespace longrun
