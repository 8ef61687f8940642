#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "longrun/rational.hpp"

namespace longrun {

// Eventually periodic utility stream: a finite head followed by a cycle that
// repeats forever. Indexing is 1-based: value_at(t) = head[t] for t <= |head|,
// then cycle entries in order, wrapping.
//
// Instances are always canonical:
//   - the cycle is primitive (not a repetition of a shorter cycle),
//   - the head is minimal (its last element differs from the last cycle
//     element, otherwise the boundary would be ambiguous).
// Two EpStreams are pointwise equal iff their canonical forms are identical,
// so operator== decides extensional equality.
class EpStream {
 public:
  // The zero stream.
  EpStream() : EpStream(std::vector<Rational>{}, std::vector<Rational>{Rational(0)}) {}

  // Canonicalizes. The cycle must be nonempty.
  static EpStream make(std::vector<Rational> head, std::vector<Rational> cycle);

  const std::vector<Rational>& head() const { return head_; }
  const std::vector<Rational>& cycle() const { return cycle_; }
  std::int64_t head_length() const { return static_cast<std::int64_t>(head_.size()); }
  std::int64_t period() const { return static_cast<std::int64_t>(cycle_.size()); }

  // 1-based. Constant time for any t (no unrolling), so indices like 1e9 are fine.
  const Rational& value_at(std::int64_t t) const;

  // Exact sum of the first T values, T >= 0. Closed form over full cycles.
  Rational partial_sum(std::int64_t T) const;

  Rational cycle_sum() const;
  Rational cycle_mean() const;

  // Extremes over head and cycle together (the set of values ever taken) and
  // over the cycle alone (the set of values taken infinitely often).
  Rational min_value() const;
  Rational max_value() const;
  Rational min_cycle() const;
  Rational max_cycle() const;

  bool operator==(const EpStream& other) const {
    return head_ == other.head_ && cycle_ == other.cycle_;
  }
  bool operator!=(const EpStream& other) const { return !(*this == other); }

 private:
  EpStream(std::vector<Rational> head, std::vector<Rational> cycle);

  std::vector<Rational> head_;
  std::vector<Rational> cycle_;
  std::vector<Rational> head_prefix_;   // head_prefix_[i] = sum of first i head values
  std::vector<Rational> cycle_prefix_;  // cycle_prefix_[i] = sum of first i cycle values
};

EpStream constant_stream(const Rational& c);

// Pointwise sum and scalar multiple. Exact; results are canonical.
EpStream add(const EpStream& a, const EpStream& b);
EpStream scale(const EpStream& s, const Rational& c);

// Drops the first T values, T >= 0.
EpStream tail(const EpStream& s, std::int64_t T);

// The periodic stream repeating the first T values forever, T >= 1.
EpStream replicate_prefix(const EpStream& s, std::int64_t T);

// First T values of s followed by the constant mean of that prefix, T >= 1.
EpStream mean_complete(const EpStream& s, std::int64_t T);

// Adds alpha at coordinate t (1-based) and leaves every other value unchanged.
EpStream add_indicator(const EpStream& s, std::int64_t t, const Rational& alpha);

// r_i = u_i + beta, r_j = u_j - beta, i != j. Preserves u_i + u_j.
EpStream transfer(const EpStream& s, std::int64_t i, std::int64_t j, const Rational& beta);

// Bounded stream given by an index rule. Values are plain doubles and are
// never converted to Rational; every evaluation checks |value| <= bound.
struct BoundViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class BoundedStream {
 public:
  BoundedStream(std::function<double(std::int64_t)> rule, double bound, std::string label);

  // 1-based. Throws BoundViolation if the rule leaves [-bound, bound].
  double value_at(std::int64_t t) const;

  double bound() const { return bound_; }
  const std::string& label() const { return label_; }

 private:
  std::function<double(std::int64_t)> rule_;
  double bound_;
  std::string label_;
};

// u_t = c + 1/t. Converges to c, so every long-run functional agrees there.
BoundedStream harmonic_shift(double c);

// Blocks of constant 0s and 1s with doubling lengths: value is parity of
// floor(log2 t). Partial means oscillate between 1/3 and 2/3 forever, the
// standard example of a bounded stream with no long-run average.
BoundedStream doubling_blocks();

// Approximate-mode replication: repeats the first T sampled values. The exact
// EpStream overload is the only path that produces exact replicas.
BoundedStream replicate_prefix(const BoundedStream& s, std::int64_t T);

}  // namespace longrun
