#include "longrun/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "longrun/permutation.hpp"

namespace longrun {

namespace {

ComparisonResult scalar_compare(const Rational& a, const Rational& b) {
  ComparisonResult r;
  if (a > b)
    r.verdict = Verdict::StrictlyBetter;
  else if (a < b)
    r.verdict = Verdict::StrictlyWorse;
  else
    r.verdict = Verdict::Equivalent;
  return r;
}

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

const EpStream& pick(const std::vector<EpStream>& corpus, Rng& rng) {
  return corpus[static_cast<std::size_t>(
      rng.uniform(0, static_cast<std::int64_t>(corpus.size()) - 1))];
}

Rational pick_epsilon(Rng& rng) {
  static const Rational choices[3] = {Rational(1), Rational(1, 2), Rational(1, 4)};
  return choices[rng.uniform(0, 2)];
}

std::vector<std::int64_t> random_bijection(std::int64_t n, Rng& rng) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i + 1;
  for (std::int64_t i = n - 1; i > 0; --i)
    std::swap(out[static_cast<std::size_t>(i)],
              out[static_cast<std::size_t>(rng.uniform(0, i))]);
  return out;
}

EpStream random_from_values(Rng& rng, const std::vector<Rational>& values, int head_max,
                            int cycle_max) {
  const std::int64_t h = rng.uniform(0, head_max), p = rng.uniform(1, cycle_max);
  const auto draw = [&] {
    return values[static_cast<std::size_t>(
        rng.uniform(0, static_cast<std::int64_t>(values.size()) - 1))];
  };
  std::vector<Rational> head, cycle;
  for (std::int64_t i = 0; i < h; ++i) head.push_back(draw());
  for (std::int64_t i = 0; i < p; ++i) cycle.push_back(draw());
  return EpStream::make(std::move(head), std::move(cycle));
}

EpStream strip_head(const EpStream& s) {
  return EpStream::make({}, s.cycle());
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

void put_stream(AxiomWitness& w, std::string name, EpStream s) {
  w.streams.emplace_back(std::move(name), std::move(s));
}

void put_param(AxiomWitness& w, std::string name, std::string value) {
  w.params.emplace_back(std::move(name), std::move(value));
}

void put_param(AxiomWitness& w, std::string name, std::int64_t value) {
  put_param(w, std::move(name), std::to_string(value));
}

// Premise window for the mean/replication consistency checks. The window is
// placed past the point where sign(D_T) has settled: beyond
// stable_from + P * (2 + ceil(max|window| / |drift|)) every residue class has
// crossed zero for the last time (and with zero drift the window pattern is
// already final). A window there tells the truth about the eventual premise,
// so rules whose verdicts track sign(D_T) get no spurious bounded failures.
std::pair<std::int64_t, std::int64_t> stabilized_window(const EpStream& u,
                                                        const EpStream& v,
                                                        const HarnessConfig& cfg,
                                                        Rng& rng) {
  const DifferenceProfile prof = DifferenceProfile::build(u, v);
  const std::int64_t P = prof.period;
  std::int64_t S = 0;
  if (prof.drift == 0) {
    S = prof.stable_from + 2 * P;
  } else {
    const std::int64_t steps = ceil_div(prof.window_max_abs(), abs_rational(prof.drift));
    S = prof.stable_from + P * (2 + steps);
  }
  if (S > 200000) return {-1, 0};
  const std::int64_t T_star = std::max<std::int64_t>(1, S + rng.uniform(0, P - 1));
  const std::int64_t width = std::max<std::int64_t>(cfg.window_W, 2 * P);
  return {T_star, width};
}

// Pair generator for the consistency axioms. Mostly plain corpus picks, but a
// quarter of trials pit a large finite head bonus against a slightly higher
// long-run mean; those pairs cross late and exercise the bounded premises.
std::pair<EpStream, EpStream> consistency_pair(const std::vector<EpStream>& corpus,
                                               Rng& rng) {
  if (rng.uniform(0, 3) < 3) return {pick(corpus, rng), pick(corpus, rng)};
  const EpStream base = rng.coin() ? constant_stream(Rational(0)) : pick(corpus, rng);
  std::vector<Rational> head;
  for (int i = 0; i < 4; ++i) head.push_back(Rational(rng.uniform(2, 3)));
  head.insert(head.end(), base.head().begin(), base.head().end());
  EpStream u = EpStream::make(std::move(head), base.cycle());
  const std::int64_t L = rng.uniform(5, 6);
  std::vector<Rational> bump(static_cast<std::size_t>(L), Rational(0));
  bump[0] = 1;
  EpStream v = add(base, EpStream::make({}, std::move(bump)));
  return {u, v};
}

// ---- materials builders, one per axiom --------------------------------------

AxiomWitness mat_finite_anonymity(const std::vector<EpStream>& corpus,
                                  const HarnessConfig&, Rng& rng) {
  AxiomWitness m;
  const EpStream u = pick(corpus, rng);
  const std::int64_t T = rng.uniform(2, 8);
  const std::vector<std::int64_t> mapping = random_bijection(T, rng);
  const FinitePermutation pi(mapping);
  put_stream(m, "u", u);
  put_stream(m, "u_permuted", apply_finite_permutation(u, pi));
  put_param(m, "horizon", T);
  put_param(m, "mapping", join_ints(mapping));
  return m;
}

AxiomWitness mat_fixed_step_anonymity(const std::vector<EpStream>& corpus,
                                      const HarnessConfig&, Rng& rng) {
  AxiomWitness m;
  const EpStream u = pick(corpus, rng);
  const std::int64_t k = rng.uniform(2, 4);
  const std::int64_t nblocks = rng.uniform(0, 2);
  std::vector<std::vector<std::int64_t>> blocks;
  std::string blocks_text;
  for (std::int64_t b = 0; b < nblocks; ++b) {
    blocks.push_back(random_bijection(k, rng));
    if (b) blocks_text += '|';
    blocks_text += join_ints(blocks.back());
  }
  const std::vector<std::int64_t> tail = random_bijection(k, rng);
  const FixedStepPermutation pi(k, blocks, tail);
  put_stream(m, "u", u);
  put_stream(m, "u_permuted", apply_fixed_step_permutation(u, pi));
  put_param(m, "step", k);
  put_param(m, "blocks", blocks_text);
  put_param(m, "tail_block", join_ints(tail));
  return m;
}

AxiomWitness mat_uniform_pareto(const std::vector<EpStream>& corpus,
                                const HarnessConfig&, Rng& rng) {
  AxiomWitness m;
  const EpStream v = pick(corpus, rng);
  const Rational eps = pick_epsilon(rng);
  static const std::vector<Rational> noise_values = {Rational(0), Rational(1, 2),
                                                     Rational(1), Rational(2)};
  const EpStream noise = random_from_values(rng, noise_values, 3, 4);
  put_stream(m, "u", add(add(v, constant_stream(eps)), noise));
  put_stream(m, "v", v);
  put_param(m, "epsilon", format_rational(eps));
  return m;
}

AxiomWitness mat_one_generation_additivity(const std::vector<EpStream>& corpus,
                                           const HarnessConfig&, Rng& rng) {
  AxiomWitness m;
  const EpStream u = pick(corpus, rng), v = pick(corpus, rng);
  const std::int64_t t = rng.uniform(1, 10);
  static const Rational alphas[6] = {Rational(1),     Rational(-1), Rational(1, 2),
                                     Rational(-1, 2), Rational(2),  Rational(-2)};
  const Rational alpha = alphas[rng.uniform(0, 5)];
  put_stream(m, "u", u);
  put_stream(m, "v", v);
  put_stream(m, "u_shifted", add_indicator(u, t, alpha));
  put_stream(m, "v_shifted", add_indicator(v, t, alpha));
  put_param(m, "t", t);
  put_param(m, "alpha", format_rational(alpha));
  return m;
}

AxiomWitness mat_periodic_additivity(const std::vector<EpStream>& corpus,
                                     const HarnessConfig& cfg, Rng& rng) {
  AxiomWitness m;
  EpStream u = pick(corpus, rng), v = pick(corpus, rng), w = pick(corpus, rng);
  if (!cfg.periodic_includes_head) {
    u = strip_head(u);
    v = strip_head(v);
    w = strip_head(w);
  }
  put_stream(m, "u", u);
  put_stream(m, "v", v);
  put_stream(m, "w", w);
  put_stream(m, "u_plus_w", add(u, w));
  put_stream(m, "v_plus_w", add(v, w));
  return m;
}

AxiomWitness mat_full_additivity(const std::vector<EpStream>& corpus,
                                 const HarnessConfig&, Rng& rng) {
  AxiomWitness m;
  const EpStream u = pick(corpus, rng), v = pick(corpus, rng), w = pick(corpus, rng);
  put_stream(m, "u", u);
  put_stream(m, "v", v);
  put_stream(m, "w", w);
  put_stream(m, "u_plus_w", add(u, w));
  put_stream(m, "v_plus_w", add(v, w));
  return m;
}

AxiomWitness mat_incremental_equity(const std::vector<EpStream>& corpus,
                                    const HarnessConfig&, Rng& rng) {
  AxiomWitness m;
  const EpStream u = pick(corpus, rng);
  const std::int64_t i = rng.uniform(1, 12);
  std::int64_t j = rng.uniform(1, 12);
  while (j == i) j = rng.uniform(1, 12);
  const Rational eps = pick_epsilon(rng);
  put_stream(m, "u", u);
  put_stream(m, "u_at_i", add_indicator(u, i, eps));
  put_stream(m, "u_at_j", add_indicator(u, j, eps));
  put_param(m, "i", i);
  put_param(m, "j", j);
  put_param(m, "epsilon", format_rational(eps));
  return m;
}

AxiomWitness mat_weak_non_substitution(const std::vector<EpStream>& corpus,
                                       const HarnessConfig&, Rng& rng) {
  AxiomWitness m;
  const EpStream v = pick(corpus, rng);
  const std::int64_t d = rng.uniform(1, 3);
  const Rational eps = pick_epsilon(rng);
  // u trades a first-generation loss of d for a permanent gain of eps.
  const EpStream delta = EpStream::make({Rational(-d)}, {eps});
  put_stream(m, "u", add(v, delta));
  put_stream(m, "v", v);
  put_param(m, "d", d);
  put_param(m, "epsilon", format_rational(eps));
  return m;
}

AxiomWitness mat_continuity_bounded(const std::vector<EpStream>& corpus,
                                    const HarnessConfig& cfg, Rng& rng) {
  AxiomWitness m;
  static const std::vector<Rational> w_values = {Rational(-1), Rational(-1, 2),
                                                 Rational(0), Rational(1, 2),
                                                 Rational(1)};
  put_stream(m, "u", pick(corpus, rng));
  put_stream(m, "v", pick(corpus, rng));
  put_stream(m, "w", random_from_values(rng, w_values, 3, 5));
  put_param(m, "K", static_cast<std::int64_t>(cfg.continuity_K));
  return m;
}

AxiomWitness mat_mean_consistency(const std::vector<EpStream>& corpus,
                                  const HarnessConfig& cfg, Rng& rng) {
  AxiomWitness m;
  const auto [u, v] = consistency_pair(corpus, rng);
  const auto [T_star, width] = stabilized_window(u, v, cfg, rng);
  put_stream(m, "u", u);
  put_stream(m, "v", v);
  put_param(m, "T_star", T_star);
  put_param(m, "width", width);
  return m;
}

AxiomWitness mat_fixed_step_replication(const std::vector<EpStream>& corpus,
                                        const HarnessConfig& cfg, Rng& rng) {
  AxiomWitness m;
  const auto [u, v] = consistency_pair(corpus, rng);
  put_stream(m, "u", u);
  put_stream(m, "v", v);
  put_param(m, "kmax", static_cast<std::int64_t>(cfg.fixstep_kmax));
  put_param(m, "width", static_cast<std::int64_t>(cfg.window_W));
  return m;
}

AxiomWitness mat_lemma1_transfer(const std::vector<EpStream>& corpus,
                                 const HarnessConfig&, Rng& rng) {
  AxiomWitness m;
  const EpStream u = pick(corpus, rng);
  const std::int64_t i = rng.uniform(1, 10);
  std::int64_t j = rng.uniform(1, 10);
  while (j == i) j = rng.uniform(1, 10);
  static const Rational betas[3] = {Rational(1), Rational(1, 2), Rational(2)};
  const Rational beta = betas[rng.uniform(0, 2)];
  put_stream(m, "u", u);
  put_stream(m, "u_transferred", transfer(u, i, j, beta));
  put_param(m, "i", i);
  put_param(m, "j", j);
  put_param(m, "beta", format_rational(beta));
  return m;
}

AxiomWitness mat_lemma2_periodic_transfer(const std::vector<EpStream>& corpus,
                                          const HarnessConfig&, Rng& rng) {
  AxiomWitness m;
  const EpStream base = pick(corpus, rng);
  const std::int64_t T = rng.uniform(2, 8);
  const EpStream w = replicate_prefix(base, T);
  std::vector<Rational> cyc(w.cycle().begin(), w.cycle().end());
  if (cyc.size() == 1) cyc.push_back(cyc.front());
  const std::int64_t n = static_cast<std::int64_t>(cyc.size());
  const std::int64_t i = rng.uniform(0, n - 1);
  std::int64_t j = rng.uniform(0, n - 1);
  while (j == i) j = rng.uniform(0, n - 1);
  static const Rational betas[3] = {Rational(1), Rational(1, 2), Rational(2)};
  const Rational beta = betas[rng.uniform(0, 2)];
  std::vector<Rational> moved = cyc;
  moved[static_cast<std::size_t>(i)] += beta;
  moved[static_cast<std::size_t>(j)] -= beta;
  put_stream(m, "u", EpStream::make({}, std::move(cyc)));
  put_stream(m, "u_transferred", EpStream::make({}, std::move(moved)));
  put_param(m, "prefix_T", T);
  put_param(m, "i", i + 1);
  put_param(m, "j", j + 1);
  put_param(m, "beta", format_rational(beta));
  return m;
}

using MaterialsFn = AxiomWitness (*)(const std::vector<EpStream>&, const HarnessConfig&,
                                     Rng&);

const std::map<std::string, MaterialsFn>& materials_registry() {
  static const std::map<std::string, MaterialsFn> registry = {
      {"finite_anonymity", mat_finite_anonymity},
      {"fixed_step_anonymity", mat_fixed_step_anonymity},
      {"uniform_pareto", mat_uniform_pareto},
      {"one_generation_additivity", mat_one_generation_additivity},
      {"periodic_additivity", mat_periodic_additivity},
      {"full_additivity", mat_full_additivity},
      {"incremental_equity", mat_incremental_equity},
      {"weak_non_substitution", mat_weak_non_substitution},
      {"continuity_bounded", mat_continuity_bounded},
      {"mean_consistency_bounded", mat_mean_consistency},
      {"replication_consistency_bounded", mat_mean_consistency},
      {"fixed_step_replication_consistency", mat_fixed_step_replication},
      {"lemma1_transfer", mat_lemma1_transfer},
      {"lemma2_periodic_transfer", mat_lemma2_periodic_transfer},
  };
  return registry;
}

// ---- single evaluation path used by the harness and by replay ---------------

std::int64_t param_int(const AxiomWitness& m, const std::string& name) {
  return std::stoll(m.param(name));
}

bool fails_on(const Rule& rule, const std::string& axiom_id, const AxiomWitness& m,
              const HarnessConfig&, std::string* detail_out) {
  const auto detail = [&](std::string text) {
    if (detail_out) *detail_out = std::move(text);
    return true;
  };
  const auto verdict_of = [&](const EpStream& a, const EpStream& b) {
    return rule.compare(a, b).verdict;
  };

  if (axiom_id == "finite_anonymity" || axiom_id == "fixed_step_anonymity") {
    const Verdict got = verdict_of(m.stream("u"), m.stream("u_permuted"));
    if (got == Verdict::Equivalent) return false;
    return detail(std::string("expected Equivalent, got ") + to_string(got));
  }
  if (axiom_id == "uniform_pareto") {
    const Verdict got = verdict_of(m.stream("u"), m.stream("v"));
    if (got == Verdict::StrictlyBetter) return false;
    return detail(std::string("expected StrictlyBetter, got ") + to_string(got));
  }
  if (axiom_id == "one_generation_additivity") {
    const Verdict before = verdict_of(m.stream("u"), m.stream("v"));
    const Verdict after = verdict_of(m.stream("u_shifted"), m.stream("v_shifted"));
    if (before == after) return false;
    return detail(std::string("verdict changed: ") + to_string(before) + " -> " +
                  to_string(after));
  }
  if (axiom_id == "periodic_additivity" || axiom_id == "full_additivity") {
    const Verdict before = verdict_of(m.stream("u"), m.stream("v"));
    const Verdict after = verdict_of(m.stream("u_plus_w"), m.stream("v_plus_w"));
    if (before == after) return false;
    return detail(std::string("verdict changed: ") + to_string(before) + " -> " +
                  to_string(after));
  }
  if (axiom_id == "incremental_equity") {
    const Verdict got = verdict_of(m.stream("u_at_i"), m.stream("u_at_j"));
    if (got == Verdict::Equivalent) return false;
    return detail(std::string("expected Equivalent, got ") + to_string(got));
  }
  if (axiom_id == "weak_non_substitution") {
    const ComparisonResult r = rule.compare(m.stream("u"), m.stream("v"));
    if (relation_holds(r)) return false;
    return detail(std::string("expected u at least as good, got ") +
                  to_string(r.verdict));
  }
  if (axiom_id == "lemma1_transfer" || axiom_id == "lemma2_periodic_transfer") {
    const Verdict got = verdict_of(m.stream("u"), m.stream("u_transferred"));
    if (got == Verdict::Equivalent) return false;
    return detail(std::string("expected Equivalent, got ") + to_string(got));
  }

  // Bounded-horizon falsification checks: a failure requires the conclusion to
  // break while the premise holds on the whole examined window, so the cheap
  // conclusion is tested first.
  if (axiom_id == "continuity_bounded") {
    const EpStream &u = m.stream("u"), &v = m.stream("v"), &w = m.stream("w");
    const Verdict conclusion = verdict_of(u, v);
    if (conclusion != Verdict::StrictlyWorse) return false;
    const std::int64_t K = param_int(m, "K");
    for (std::int64_t k = 1; k <= K; ++k)
      if (!relation_holds(rule.compare(add(u, scale(w, Rational(1, k))), v)))
        return false;
    return detail("perturbed comparisons hold for k = 1.." + std::to_string(K) +
                  " yet the limit verdict is StrictlyWorse");
  }
  if (axiom_id == "mean_consistency_bounded" ||
      axiom_id == "replication_consistency_bounded") {
    const EpStream &u = m.stream("u"), &v = m.stream("v");
    const Verdict conclusion = verdict_of(u, v);
    if (conclusion != Verdict::StrictlyWorse) return false;
    const std::int64_t T_star = param_int(m, "T_star");
    if (T_star < 1) return false;  // window out of supported range, premise unknown
    const std::int64_t width = param_int(m, "width");
    const bool means = axiom_id == "mean_consistency_bounded";
    for (std::int64_t T = T_star; T <= T_star + width; ++T) {
      const EpStream a = means ? mean_complete(u, T) : replicate_prefix(u, T);
      const EpStream b = means ? mean_complete(v, T) : replicate_prefix(v, T);
      if (!relation_holds(rule.compare(a, b))) return false;
    }
    return detail("premise holds on T in [" + std::to_string(T_star) + ", " +
                  std::to_string(T_star + width) +
                  "] yet the verdict is StrictlyWorse");
  }
  if (axiom_id == "fixed_step_replication_consistency") {
    const EpStream &u = m.stream("u"), &v = m.stream("v");
    const Verdict conclusion = verdict_of(u, v);
    if (conclusion != Verdict::StrictlyWorse) return false;
    if (rule.id == "cesaro") {
      // Exact: the rule's premise coincides with the fixed-step criterion.
      if (!relation_holds(compare_fixed_step(u, v))) return false;
      return detail("fixed-step premise holds exactly yet the verdict is "
                    "StrictlyWorse");
    }
    const std::int64_t kmax = param_int(m, "kmax");
    const std::int64_t width = param_int(m, "width");
    for (std::int64_t k = 1; k <= kmax; ++k) {
      bool ok = true;
      for (std::int64_t T = 1; T <= width; ++T) {
        if (!relation_holds(
                rule.compare(replicate_prefix(u, k * T), replicate_prefix(v, k * T)))) {
          ok = false;
          break;
        }
      }
      if (ok)
        return detail("premise holds at step k=" + std::to_string(k) + " for T = 1.." +
                      std::to_string(width) + " yet the verdict is StrictlyWorse");
    }
    return false;
  }
  throw std::invalid_argument("unknown axiom id '" + axiom_id + "'");
}

AxiomMode axiom_mode(const Rule& rule, const std::string& axiom_id) {
  if (axiom_id == "continuity_bounded" || axiom_id == "mean_consistency_bounded" ||
      axiom_id == "replication_consistency_bounded")
    return AxiomMode::BoundedHorizon;
  if (axiom_id == "fixed_step_replication_consistency")
    return rule.id == "cesaro" ? AxiomMode::Exact : AxiomMode::BoundedHorizon;
  return AxiomMode::Exact;
}

}  // namespace

const Rule& builtin_rule(const std::string& id) {
  static const std::map<std::string, Rule> registry = [] {
    std::map<std::string, Rule> r;
    const auto put = [&](std::string rid, bool complete,
                         std::function<ComparisonResult(const EpStream&,
                                                        const EpStream&)> fn) {
      Rule rule;
      rule.id = rid;
      rule.complete = complete;
      rule.compare = std::move(fn);
      r.emplace(std::move(rid), std::move(rule));
    };
    put("cesaro", true, compare_cesaro);
    put("catching_up", false, compare_catching_up);
    put("fixed_step", true, compare_fixed_step);
    put("trivial_indifference", true, [](const EpStream&, const EpStream&) {
      ComparisonResult res;
      res.verdict = Verdict::Equivalent;
      return res;
    });
    put("dictator_t1", true, [](const EpStream& u, const EpStream& v) {
      return scalar_compare(u.value_at(1), v.value_at(1));
    });
    put("inf_rule", true, [](const EpStream& u, const EpStream& v) {
      return scalar_compare(u.min_value(), v.min_value());
    });
    put("liminf_value", true, [](const EpStream& u, const EpStream& v) {
      return scalar_compare(u.min_cycle(), v.min_cycle());
    });
    put("liminf_mean", true, [](const EpStream& u, const EpStream& v) {
      return scalar_compare(u.cycle_mean(), v.cycle_mean());
    });
    return r;
  }();
  const auto it = registry.find(id);
  if (it == registry.end()) throw std::invalid_argument("unknown rule id '" + id + "'");
  return it->second;
}

std::vector<std::string> builtin_rule_ids() {
  return {"cesaro",       "catching_up",          "fixed_step",  "trivial_indifference",
          "dictator_t1",  "inf_rule",             "liminf_value", "liminf_mean"};
}

const char* to_string(AxiomMode m) {
  return m == AxiomMode::Exact ? "exact" : "bounded-horizon";
}

const EpStream& AxiomWitness::stream(const std::string& name) const {
  for (const auto& [n, s] : streams)
    if (n == name) return s;
  throw std::out_of_range("witness has no stream named '" + name + "'");
}

std::string AxiomWitness::param(const std::string& name) const {
  for (const auto& [n, v] : params)
    if (n == name) return v;
  throw std::out_of_range("witness has no param named '" + name + "'");
}

bool AxiomWitness::has_param(const std::string& name) const {
  for (const auto& [n, v] : params)
    if (n == name) return true;
  return false;
}

const std::vector<std::string>& axiom_ids() {
  static const std::vector<std::string> ids = {
      "finite_anonymity",
      "fixed_step_anonymity",
      "uniform_pareto",
      "one_generation_additivity",
      "periodic_additivity",
      "full_additivity",
      "incremental_equity",
      "weak_non_substitution",
      "continuity_bounded",
      "mean_consistency_bounded",
      "replication_consistency_bounded",
      "fixed_step_replication_consistency",
      "lemma1_transfer",
      "lemma2_periodic_transfer",
  };
  return ids;
}

EpStream random_ep_stream(Rng& rng) {
  const std::int64_t h = rng.uniform(0, 4), p = rng.uniform(1, 6);
  std::vector<Rational> head, cycle;
  for (std::int64_t i = 0; i < h; ++i) head.push_back(Rational(rng.uniform(-3, 3)));
  for (std::int64_t i = 0; i < p; ++i) cycle.push_back(Rational(rng.uniform(-3, 3)));
  return EpStream::make(std::move(head), std::move(cycle));
}

std::vector<EpStream> make_corpus(std::size_t n, std::uint64_t seed) {
  std::vector<EpStream> corpus;
  corpus.reserve(n);
  const Rng root(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Rng child = root.split(static_cast<std::uint64_t>(i));
    corpus.push_back(random_ep_stream(child));
  }
  return corpus;
}

AxiomReport test_axiom(const Rule& rule, const std::string& axiom_id,
                       const std::vector<EpStream>& corpus,
                       const HarnessConfig& config) {
  const auto mat_it = materials_registry().find(axiom_id);
  if (mat_it == materials_registry().end())
    throw std::invalid_argument("unknown axiom id '" + axiom_id + "'");
  if (corpus.empty()) throw std::invalid_argument("corpus must be non-empty");
  if (config.trials < 1) throw std::invalid_argument("trials must be positive");

  AxiomReport report;
  report.rule_id = rule.id;
  report.axiom_id = axiom_id;
  report.mode = axiom_mode(rule, axiom_id);
  report.trials = config.trials;
  report.seed = config.seed;

  const Rng axiom_root = Rng(config.seed).split(axiom_id);
  for (std::int64_t i = 0; i < config.trials; ++i) {
    Rng trial = axiom_root.split(static_cast<std::uint64_t>(i));
    AxiomWitness m = mat_it->second(corpus, config, trial);
    std::string detail;
    if (fails_on(rule, axiom_id, m, config, &detail)) {
      ++report.failures;
      if (static_cast<std::int64_t>(report.witnesses.size()) < config.witness_cap) {
        m.detail = std::move(detail);
        report.witnesses.push_back(std::move(m));
      }
    }
  }
  return report;
}

bool replay_axiom_witness(const Rule& rule, const std::string& axiom_id,
                          const AxiomWitness& witness, const HarnessConfig& config) {
  return fails_on(rule, axiom_id, witness, config, nullptr);
}

const std::vector<IndependenceEntry>& independence_table() {
  static const std::vector<IndependenceEntry> table = {
      {"trivial_indifference",
       {"uniform_pareto"},
       {"finite_anonymity", "fixed_step_anonymity", "one_generation_additivity",
        "periodic_additivity", "full_additivity", "incremental_equity",
        "weak_non_substitution", "continuity_bounded", "mean_consistency_bounded",
        "replication_consistency_bounded", "fixed_step_replication_consistency",
        "lemma1_transfer", "lemma2_periodic_transfer"}},
      {"dictator_t1",
       {"finite_anonymity", "fixed_step_anonymity"},
       {"uniform_pareto", "continuity_bounded", "one_generation_additivity",
        "periodic_additivity", "full_additivity", "mean_consistency_bounded",
        "replication_consistency_bounded", "fixed_step_replication_consistency"}},
      {"inf_rule",
       {"one_generation_additivity", "periodic_additivity"},
       {"uniform_pareto", "finite_anonymity", "fixed_step_anonymity",
        "continuity_bounded", "mean_consistency_bounded",
        "replication_consistency_bounded", "fixed_step_replication_consistency"}},
      {"liminf_value",
       {"mean_consistency_bounded"},
       {"uniform_pareto", "finite_anonymity", "fixed_step_anonymity",
        "continuity_bounded", "one_generation_additivity", "incremental_equity",
        "weak_non_substitution", "lemma1_transfer"}},
      {"liminf_mean",
       {"fixed_step_replication_consistency"},
       {"finite_anonymity", "fixed_step_anonymity", "uniform_pareto",
        "one_generation_additivity", "periodic_additivity", "full_additivity",
        "incremental_equity", "weak_non_substitution", "continuity_bounded",
        "mean_consistency_bounded", "replication_consistency_bounded",
        "lemma1_transfer", "lemma2_periodic_transfer"}},
  };
  return table;
}

namespace {

std::string describe_stream(const EpStream& s) {
  std::ostringstream os;
  os << "head=[";
  for (std::size_t i = 0; i < s.head().size(); ++i) {
    if (i) os << ',';
    os << format_rational(s.head()[i]);
  }
  os << "] cycle=[";
  for (std::size_t i = 0; i < s.cycle().size(); ++i) {
    if (i) os << ',';
    os << format_rational(s.cycle()[i]);
  }
  os << ']';
  return os.str();
}

double stream_complexity(const EpStream& s) {
  double score = 10.0 * static_cast<double>(s.head_length() + s.period());
  for (const Rational& r : s.head()) score += std::fabs(to_double(r));
  for (const Rational& r : s.cycle()) score += std::fabs(to_double(r));
  return score;
}

Rational shrink_value(const Rational& r) {
  if (r == 0) return r;
  if (denominator(r) == 1) {
    const Rational step = r > 0 ? Rational(-1) : Rational(1);
    return r + step;
  }
  // Snap non-integers to the integer part, which always moves toward zero.
  return Rational(numerator(r) / denominator(r));
}

std::vector<EpStream> shrink_candidates(const EpStream& s) {
  std::vector<EpStream> out;
  const std::vector<Rational>& head = s.head();
  const std::vector<Rational>& cycle = s.cycle();
  if (!head.empty()) {
    out.push_back(EpStream::make({head.begin(), head.end() - 1}, cycle));
    out.push_back(EpStream::make({head.begin() + 1, head.end()}, cycle));
  }
  if (cycle.size() > 1) {
    if (cycle.size() % 2 == 0)
      out.push_back(EpStream::make(head, {cycle.begin(),
                                          cycle.begin() + cycle.size() / 2}));
    out.push_back(EpStream::make(head, {cycle.begin(), cycle.end() - 1}));
  }
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head[i] == 0) continue;
    std::vector<Rational> h = head;
    h[i] = Rational(0);
    out.push_back(EpStream::make(h, cycle));
    h[i] = shrink_value(head[i]);
    if (h[i] != head[i]) out.push_back(EpStream::make(h, cycle));
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] == 0) continue;
    std::vector<Rational> c = cycle;
    c[i] = Rational(0);
    out.push_back(EpStream::make(head, c));
    c[i] = shrink_value(cycle[i]);
    if (c[i] != cycle[i]) out.push_back(EpStream::make(head, c));
  }
  return out;
}

template <typename Holds>
void greedy_shrink(std::vector<std::pair<std::string, EpStream>>& streams,
                   const Holds& holds, std::vector<std::string>& trace) {
  bool improved = true;
  int rounds = 0;
  while (improved && rounds++ < 400) {
    improved = false;
    for (auto& [name, s] : streams) {
      const double before = stream_complexity(s);
      for (EpStream cand : shrink_candidates(s)) {
        if (stream_complexity(cand) >= before) continue;
        const EpStream saved = s;
        s = std::move(cand);
        if (holds()) {
          trace.push_back(name + ": " + describe_stream(saved) + " -> " +
                          describe_stream(s));
          improved = true;
          break;
        }
        s = saved;
      }
      if (improved) break;
    }
  }
}

// Axioms whose witness streams can be replaced independently without breaking
// the witness's internal structure (no stream is a derived image of another).
bool shrinkable_axiom(const std::string& axiom_id) {
  return axiom_id == "continuity_bounded" || axiom_id == "mean_consistency_bounded" ||
         axiom_id == "replication_consistency_bounded" ||
         axiom_id == "fixed_step_replication_consistency";
}

}  // namespace

SearchResult search_counterexample(const std::string& property_id, std::uint64_t seed,
                                   std::int64_t budget) {
  if (budget < 1) throw std::invalid_argument("budget must be positive");
  SearchResult res;
  res.property_id = property_id;
  const Rng root = Rng(seed).split(property_id);

  const auto run_pair_search = [&](const auto& pred, const std::string& note_found) {
    for (std::int64_t i = 0; i < budget; ++i) {
      Rng trial = root.split(static_cast<std::uint64_t>(i));
      EpStream u = random_ep_stream(trial);
      EpStream v = random_ep_stream(trial);
      res.trials_used = i + 1;
      if (!pred(u, v)) continue;
      res.found = true;
      res.streams = {{"u", std::move(u)}, {"v", std::move(v)}};
      greedy_shrink(
          res.streams,
          [&] { return pred(res.streams[0].second, res.streams[1].second); },
          res.shrink_trace);
      res.note = note_found;
      return;
    }
    res.trials_used = budget;
  };

  if (property_id == "fixC_strictly_weaker_than_C") {
    run_pair_search(
        [](const EpStream& u, const EpStream& v) {
          return compare_catching_up(u, v).verdict == Verdict::StrictlyBetter &&
                 compare_fixed_step(u, v).verdict == Verdict::Equivalent;
        },
        "catching-up strict preference flattened to fixed-step equivalence");
    return res;
  }
  if (property_id == "C_incomparable_pair") {
    run_pair_search(
        [](const EpStream& u, const EpStream& v) {
          return compare_catching_up(u, v).verdict == Verdict::Incomparable;
        },
        "partial-sum difference changes sign along every tail");
    return res;
  }
  if (property_id == "C_implies_fixC_violation") {
    run_pair_search([](const EpStream& u,
                       const EpStream& v) { return !check_C_implies_fixC(u, v); },
                    "implication violated");
    if (!res.found) res.note = "no violation found; the implication held on every pair";
    return res;
  }

  const std::string prefix = "axiom_fail:";
  if (property_id.rfind(prefix, 0) == 0) {
    const std::string rest = property_id.substr(prefix.size());
    const std::size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("axiom_fail property needs the form "
                                  "axiom_fail:<rule>:<axiom>");
    const Rule& rule = builtin_rule(rest.substr(0, colon));
    const std::string axiom_id = rest.substr(colon + 1);
    const auto mat_it = materials_registry().find(axiom_id);
    if (mat_it == materials_registry().end())
      throw std::invalid_argument("unknown axiom id '" + axiom_id + "'");

    const HarnessConfig cfg;
    const std::vector<EpStream> corpus = make_corpus(500, seed);
    for (std::int64_t i = 0; i < budget; ++i) {
      Rng trial = root.split(static_cast<std::uint64_t>(i));
      AxiomWitness m = mat_it->second(corpus, cfg, trial);
      res.trials_used = i + 1;
      std::string detail;
      if (!fails_on(rule, axiom_id, m, cfg, &detail)) continue;
      res.found = true;
      res.streams = m.streams;
      res.params = m.params;
      res.note = detail;
      if (shrinkable_axiom(axiom_id)) {
        greedy_shrink(
            res.streams,
            [&] {
              AxiomWitness probe;
              probe.streams = res.streams;
              probe.params = res.params;
              return fails_on(rule, axiom_id, probe, cfg, nullptr);
            },
            res.shrink_trace);
      } else {
        res.note += "; witness streams are structurally coupled, kept unshrunk";
      }
      return res;
    }
    return res;
  }
  throw std::invalid_argument("unknown property id '" + property_id + "'");
}

}  // namespace longrun
