#pragma once

#include <cstdint>
#include <string_view>

namespace longrun {

// Deterministic generator used everywhere randomness appears. SplitMix64 with
// explicit rejection sampling: std::uniform_int_distribution is not pinned
// down by the standard, and seeded reports must be byte-identical.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi], inclusive. Rejection keeps the draw unbiased.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next_u64());  // full span
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % range);
  }

  bool coin() { return (next_u64() & 1u) != 0; }

  // Independent child stream. Trials draw from split(trial_index) so results
  // do not depend on evaluation order.
  Rng split(std::uint64_t label) const {
    Rng child(seed_ ^ (0x9e3779b97f4a7c15ULL * (label + 0x632be59bd9b4e019ULL)));
    child.next_u64();
    return child;
  }

  Rng split(std::string_view label) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    return split(h);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace longrun
