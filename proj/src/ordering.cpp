#include "longrun/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace longrun {

namespace {

ComparisonResult make_result(Verdict v, CompareWitness w = {}) {
  ComparisonResult r;
  r.verdict = v;
  r.witness = std::move(w);
  return r;
}

// Largest T with sign-bad difference, or 0 when none; the dominant side is
// settled from T*+1 on.  sign = +1 scans for D_T < 0, sign = -1 for D_T > 0.
std::int64_t last_bad_index(const DifferenceProfile& prof, int sign) {
  std::int64_t last = 0;
  for (std::int64_t T = 1; T < static_cast<std::int64_t>(prof.prefix.size()); ++T) {
    const Rational& d = prof.prefix[static_cast<std::size_t>(T)];
    if ((sign > 0 && d < 0) || (sign < 0 && d > 0)) last = T;
  }
  const std::int64_t H = prof.stable_from, P = prof.period;
  for (std::int64_t i = 0; i < P; ++i) {
    const Rational& w = prof.window[static_cast<std::size_t>(i)];
    if (prof.drift != 0) {
      // Residue class H+i+mP carries values w + m*drift; with drift pushing
      // the dominant way, the last bad multiplier is ceil(-sw/|drift|) - 1.
      const Rational sw = sign > 0 ? w : Rational(-w);
      const Rational sdrift = sign > 0 ? prof.drift : Rational(-prof.drift);
      if (sdrift <= 0) throw std::logic_error("last_bad_index: drift sign mismatch");
      if (sw < 0) {
        const std::int64_t m = ceil_div(-sw, sdrift) - 1;
        last = std::max(last, H + i + m * P);
      }
    } else {
      if ((sign > 0 && w < 0) || (sign < 0 && w > 0))
        throw std::logic_error("last_bad_index: bad window entry with zero drift");
    }
  }
  return last;
}

// Validity of checkpoint step k for the sign-dominant side: every pre-stable
// multiple of k must already satisfy the sign, and (for zero drift strictness
// handled by the caller) the stable residue-0 values take care of the rest.
bool prestable_multiples_ok(const DifferenceProfile& prof, std::int64_t k, int sign,
                            bool strict_zero) {
  for (std::int64_t t = k; t < prof.stable_from; t += k) {
    const Rational& d = prof.prefix[static_cast<std::size_t>(t)];
    if (strict_zero) {
      if (d != 0) return false;
    } else if ((sign > 0 && d < 0) || (sign < 0 && d > 0)) {
      return false;
    }
  }
  return true;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictlyBetter: return "StrictlyBetter";
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::StrictlyWorse: return "StrictlyWorse";
    case Verdict::Incomparable: return "Incomparable";
    case Verdict::Unknown: return "Unknown";
  }
  throw std::logic_error("unreachable verdict");
}

DifferenceProfile DifferenceProfile::build(const EpStream& u, const EpStream& v) {
  DifferenceProfile prof;
  prof.stable_from = std::max(u.head_length(), v.head_length());
  prof.period = std::lcm(u.period(), v.period());
  prof.drift = Rational(prof.period) * (u.cycle_mean() - v.cycle_mean());
  prof.prefix.reserve(static_cast<std::size_t>(prof.stable_from) + 1);
  for (std::int64_t T = 0; T <= prof.stable_from; ++T)
    prof.prefix.push_back(u.partial_sum(T) - v.partial_sum(T));
  prof.window.reserve(static_cast<std::size_t>(prof.period));
  for (std::int64_t i = 0; i < prof.period; ++i) {
    const std::int64_t T = prof.stable_from + i;
    prof.window.push_back(u.partial_sum(T) - v.partial_sum(T));
  }
  // One full period past the window must reproduce it shifted by the drift.
  for (std::int64_t i = 0; i < prof.period; ++i) {
    const std::int64_t T = prof.stable_from + i + prof.period;
    const Rational direct = u.partial_sum(T) - v.partial_sum(T);
    if (direct != prof.window[static_cast<std::size_t>(i)] + prof.drift)
      throw std::logic_error("difference profile failed its periodicity check");
  }
  return prof;
}

Rational DifferenceProfile::diff_sum(std::int64_t T) const {
  if (T < 0) throw std::invalid_argument("diff_sum needs T >= 0");
  if (T <= stable_from) return prefix[static_cast<std::size_t>(T)];
  const std::int64_t off = T - stable_from;
  const std::int64_t m = off / period, i = off % period;
  return window[static_cast<std::size_t>(i)] + Rational(m) * drift;
}

Rational DifferenceProfile::window_max_abs() const {
  Rational best(0);
  for (const Rational& w : window) best = std::max(best, Rational(abs(w)));
  return best;
}

ComparisonResult compare_cesaro(const EpStream& u, const EpStream& v) {
  const Rational a = u.cycle_mean(), b = v.cycle_mean();
  if (a > b) return make_result(Verdict::StrictlyBetter);
  if (a < b) return make_result(Verdict::StrictlyWorse);
  return make_result(Verdict::Equivalent);
}

ComparisonResult compare_catching_up(const EpStream& u, const EpStream& v) {
  const DifferenceProfile prof = DifferenceProfile::build(u, v);
  CompareWitness wit;
  if (prof.drift > 0) {
    wit.stable_from = last_bad_index(prof, +1) + 1;
    return make_result(Verdict::StrictlyBetter, wit);
  }
  if (prof.drift < 0) {
    wit.stable_from = last_bad_index(prof, -1) + 1;
    return make_result(Verdict::StrictlyWorse, wit);
  }
  Rational wmin = prof.window.front(), wmax = prof.window.front();
  for (const Rational& w : prof.window) {
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
  }
  if (wmin == 0 && wmax == 0) {
    std::int64_t last = 0;
    for (std::int64_t T = 1; T <= prof.stable_from; ++T)
      if (prof.prefix[static_cast<std::size_t>(T)] != 0) last = T;
    wit.stable_from = last + 1;
    return make_result(Verdict::Equivalent, wit);
  }
  if (wmin >= 0) {
    wit.stable_from = last_bad_index(prof, +1) + 1;
    return make_result(Verdict::StrictlyBetter, wit);
  }
  if (wmax <= 0) {
    wit.stable_from = last_bad_index(prof, -1) + 1;
    return make_result(Verdict::StrictlyWorse, wit);
  }
  // Persistent sign changes: both classes recur forever, so record one of each.
  for (std::int64_t i = 0; i < prof.period; ++i) {
    const Rational& w = prof.window[static_cast<std::size_t>(i)];
    if (w > 0 && !wit.positive_at) wit.positive_at = prof.stable_from + i;
    if (w < 0 && !wit.negative_at) wit.negative_at = prof.stable_from + i;
  }
  return make_result(Verdict::Incomparable, wit);
}

ComparisonResult compare_fixed_step(const EpStream& u, const EpStream& v) {
  const DifferenceProfile prof = DifferenceProfile::build(u, v);
  const std::int64_t P = prof.period, H = prof.stable_from;

  // If any step witnesses a direction then every multiple of P lying beyond it
  // does too, so it suffices to search k = m*P.
  const auto first_valid_multiple = [&](int sign, bool strict_zero) -> std::int64_t {
    for (std::int64_t m = 1;; ++m) {
      const std::int64_t k = m * P;
      if (!prestable_multiples_ok(prof, k, sign, strict_zero)) continue;
      if (prof.drift != 0) {
        // First stable multiple of k sits at the residue-0 class; later ones
        // only move further along the drift.
        std::int64_t t = k;
        while (t < H) t += k;
        const Rational d = prof.diff_sum(t);
        if ((sign > 0 && d < 0) || (sign < 0 && d > 0)) continue;
      }
      return k;
      // Termination: once k >= H there are no pre-stable multiples and the
      // drift term dominates, so some m always succeeds for the drift side.
    }
  };

  CompareWitness wit;
  if (prof.drift > 0) {
    wit.step = first_valid_multiple(+1, false);
    return make_result(Verdict::StrictlyBetter, wit);
  }
  if (prof.drift < 0) {
    wit.step = first_valid_multiple(-1, false);
    return make_result(Verdict::StrictlyWorse, wit);
  }
  // Zero drift: along multiples of P the stable checkpoint value is the window
  // entry at the unique index congruent to 0 mod P, and it decides everything.
  const std::int64_t T0 = ((H + P - 1) / P) * P;
  const Rational D0 = prof.diff_sum(T0);
  if (D0 == 0) {
    wit.step = first_valid_multiple(+1, true);
    return make_result(Verdict::Equivalent, wit);
  }
  if (D0 > 0) {
    wit.step = first_valid_multiple(+1, false);
    return make_result(Verdict::StrictlyBetter, wit);
  }
  wit.step = first_valid_multiple(-1, false);
  return make_result(Verdict::StrictlyWorse, wit);
}

ComparisonResult brute_force_compare(const EpStream& u, const EpStream& v,
                                     Criterion criterion, std::int64_t horizon,
                                     int kmax) {
  if (horizon < 8) throw std::invalid_argument("brute force needs horizon >= 8");
  if (horizon > 5000000) throw std::invalid_argument("brute force horizon too large");
  std::vector<Rational> D(static_cast<std::size_t>(horizon) + 1, Rational(0));
  Rational su(0), sv(0);
  for (std::int64_t T = 1; T <= horizon; ++T) {
    su += u.value_at(T);
    sv += v.value_at(T);
    D[static_cast<std::size_t>(T)] = su - sv;
  }
  const std::int64_t settle_cut = horizon / 2;
  const std::int64_t late_cut = horizon - std::max<std::int64_t>(1, horizon / 4);

  if (criterion == Criterion::CatchingUp) {
    const auto side = [&](int sign) -> std::pair<int, std::int64_t> {
      std::int64_t last = 0;
      for (std::int64_t T = 1; T <= horizon; ++T) {
        const Rational& d = D[static_cast<std::size_t>(T)];
        if ((sign > 0 && d < 0) || (sign < 0 && d > 0)) last = T;
      }
      if (last <= settle_cut) return {1, last};   // holds
      if (last > late_cut) return {0, last};      // refuted within horizon
      return {-1, last};                          // undecided at this horizon
    };
    const auto [su_ok, su_last] = side(+1);
    const auto [sv_ok, sv_last] = side(-1);
    if (su_ok < 0 || sv_ok < 0) return make_result(Verdict::Unknown);
    CompareWitness wit;
    if (su_ok && sv_ok) return make_result(Verdict::Equivalent);
    if (su_ok) {
      wit.stable_from = su_last + 1;
      return make_result(Verdict::StrictlyBetter, wit);
    }
    if (sv_ok) {
      wit.stable_from = sv_last + 1;
      return make_result(Verdict::StrictlyWorse, wit);
    }
    wit.negative_at = su_last;
    wit.positive_at = sv_last;
    return make_result(Verdict::Incomparable, wit);
  }

  const auto find_step = [&](int sign) -> std::int64_t {
    for (std::int64_t k = 1; k <= kmax; ++k) {
      if (horizon / k < 4) break;  // too few checkpoints to mean anything
      bool ok = true;
      for (std::int64_t T = 1; k * T <= horizon; ++T) {
        const Rational& d = D[static_cast<std::size_t>(k * T)];
        if ((sign > 0 && d < 0) || (sign < 0 && d > 0)) {
          ok = false;
          break;
        }
      }
      if (ok) return k;
    }
    return 0;
  };
  const auto late_strictly = [&](int sign) {
    for (std::int64_t T = late_cut + 1; T <= horizon; ++T) {
      const Rational& d = D[static_cast<std::size_t>(T)];
      if ((sign > 0 && d <= 0) || (sign < 0 && d >= 0)) return false;
    }
    return true;
  };

  const std::int64_t ku = find_step(+1), kv = find_step(-1);
  CompareWitness wit;
  if (ku && kv) {
    wit.step = ku;
    return make_result(Verdict::Equivalent, wit);
  }
  // A one-sided find only upgrades to a strict verdict when the tail of D is
  // strictly signed, which rules the opposite direction out for every step.
  if (ku && late_strictly(+1)) {
    wit.step = ku;
    return make_result(Verdict::StrictlyBetter, wit);
  }
  if (kv && late_strictly(-1)) {
    wit.step = kv;
    return make_result(Verdict::StrictlyWorse, wit);
  }
  return make_result(Verdict::Unknown);
}

bool check_C_implies_fixC(const EpStream& u, const EpStream& v) {
  const Verdict c = compare_catching_up(u, v).verdict;
  const Verdict f = compare_fixed_step(u, v).verdict;
  switch (c) {
    case Verdict::StrictlyBetter:
      return f == Verdict::StrictlyBetter || f == Verdict::Equivalent;
    case Verdict::StrictlyWorse:
      return f == Verdict::StrictlyWorse || f == Verdict::Equivalent;
    case Verdict::Equivalent:
      return f == Verdict::Equivalent;
    default:
      return true;  // incomparability imposes nothing on the coarser relation
  }
}

}  // namespace longrun
