#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "longrun/ordering.hpp"
#include "longrun/rng.hpp"
#include "longrun/stream.hpp"

namespace longrun {

// A comparison rule under test. Complete rules never return Incomparable.
struct Rule {
  std::string id;
  bool complete = true;
  std::function<ComparisonResult(const EpStream&, const EpStream&)> compare;
};

// Registry: cesaro, catching_up, fixed_step, trivial_indifference, dictator_t1,
// inf_rule, liminf_value, liminf_mean. Throws std::invalid_argument on an
// unknown id.
const Rule& builtin_rule(const std::string& id);
std::vector<std::string> builtin_rule_ids();

enum class AxiomMode { Exact, BoundedHorizon };

const char* to_string(AxiomMode m);

// A failing trial, stored with enough structure to replay outside the
// harness: the named streams that were compared plus the scalar parameters
// used to build them.
struct AxiomWitness {
  std::vector<std::pair<std::string, EpStream>> streams;
  std::vector<std::pair<std::string, std::string>> params;
  std::string detail;

  const EpStream& stream(const std::string& name) const;
  std::string param(const std::string& name) const;
  bool has_param(const std::string& name) const;
};

struct AxiomReport {
  std::string rule_id;
  std::string axiom_id;
  AxiomMode mode = AxiomMode::Exact;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomWitness> witnesses;  // capped; failures counts all
};

struct HarnessConfig {
  std::int64_t trials = 200;
  std::uint64_t seed = 1;
  int continuity_K = 64;   // continuity premise checked for k = 1..K
  int window_W = 64;       // consistency premise window length (at least)
  int fixstep_kmax = 12;   // bounded fixed-step premise enumerates k <= this
  bool periodic_includes_head = false;  // pure-periodic reading by default
  std::int64_t witness_cap = 5;
};

// All 14 executable axiom ids, in catalog order.
const std::vector<std::string>& axiom_ids();

// Streams drawn as |head| ~ U{0..4}, |cycle| ~ U{1..6}, entries U{-3..3}.
EpStream random_ep_stream(Rng& rng);
std::vector<EpStream> make_corpus(std::size_t n, std::uint64_t seed);

// Runs the named axiom against the rule. Trials draw corpus elements and
// parameters from seed-split child generators, so reports are reproducible
// and order-independent. Consistency axioms are bounded-horizon falsification
// checks: a recorded failure means the premise held on the entire examined
// window yet the conclusion failed.
AxiomReport test_axiom(const Rule& rule, const std::string& axiom_id,
                       const std::vector<EpStream>& corpus, const HarnessConfig& config);

// Re-executes a stored witness directly through the rule. True means the
// failure reproduces.
bool replay_axiom_witness(const Rule& rule, const std::string& axiom_id,
                          const AxiomWitness& witness, const HarnessConfig& config);

// Independence suite metadata: for each constructive counterexample rule, the
// axioms it is expected to fail and the axioms it is claimed to keep.
struct IndependenceEntry {
  std::string rule_id;
  std::vector<std::string> designated;
  std::vector<std::string> claimed;
};
const std::vector<IndependenceEntry>& independence_table();

// Randomized counterexample search with greedy deterministic shrinking.
// Properties:
//   fixC_strictly_weaker_than_C  expects a pair with u strictly better under
//                                catching up yet equivalent under fixed step
//   C_incomparable_pair          expects a catching-up incomparable pair
//   C_implies_fixC_violation     expects no witness (the implication holds)
//   axiom_fail:<rule>:<axiom>    expects a failing axiom witness for the rule
struct SearchResult {
  std::string property_id;
  bool found = false;
  std::int64_t trials_used = 0;
  std::vector<std::pair<std::string, EpStream>> streams;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> shrink_trace;
  std::string note;
};
SearchResult search_counterexample(const std::string& property_id, std::uint64_t seed,
                                   std::int64_t budget);

}  // namespace longrun
