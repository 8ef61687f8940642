#pragma once

#include <cstdint>
#include <vector>

#include "longrun/stream.hpp"

namespace longrun {

// Permutation of coordinates that moves only an initial segment: pi is a
// bijection of {1..horizon} and the identity beyond.
class FinitePermutation {
 public:
  // mapping[i-1] = pi(i), a bijection of {1..mapping.size()}. Validated.
  explicit FinitePermutation(std::vector<std::int64_t> mapping);

  static FinitePermutation identity(std::int64_t horizon);
  static FinitePermutation swap_coords(std::int64_t i, std::int64_t j);

  std::int64_t horizon() const { return static_cast<std::int64_t>(mapping_.size()); }
  std::int64_t apply(std::int64_t t) const {
    return t <= horizon() ? mapping_[static_cast<std::size_t>(t - 1)] : t;
  }
  const std::vector<std::int64_t>& mapping() const { return mapping_; }

 private:
  std::vector<std::int64_t> mapping_;
};

// Fixed-step permutation with step k: finitely many explicit block bijections
// of {1..k} followed by one bijection repeated on every later block. This
// blockwise form is exact, not a restriction: any permutation satisfying
// pi({1..kT}) = {1..kT} for every T maps each length-k block onto itself
// (take differences of consecutive prefixes).
class FixedStepPermutation {
 public:
  // Each block, and tail_block, must be a bijection of {1..step}. Validated.
  FixedStepPermutation(std::int64_t step, std::vector<std::vector<std::int64_t>> blocks,
                       std::vector<std::int64_t> tail_block);

  static FixedStepPermutation block_identity(std::int64_t step);

  std::int64_t step() const { return step_; }
  std::int64_t block_count() const { return static_cast<std::int64_t>(blocks_.size()); }
  const std::vector<std::vector<std::int64_t>>& blocks() const { return blocks_; }
  const std::vector<std::int64_t>& tail_block() const { return tail_block_; }

  std::int64_t apply(std::int64_t t) const {
    const std::int64_t b = (t - 1) / step_;
    const std::int64_t r = (t - 1) % step_;
    const auto& sigma =
        b < block_count() ? blocks_[static_cast<std::size_t>(b)] : tail_block_;
    return b * step_ + sigma[static_cast<std::size_t>(r)];
  }

 private:
  std::int64_t step_;
  std::vector<std::vector<std::int64_t>> blocks_;
  std::vector<std::int64_t> tail_block_;
};

// Result value at t is s at pi(t). Both stay eventually periodic: a finite
// permutation only edits a prefix, a fixed-step permutation settles into a
// cycle of length lcm(period, step) once the explicit blocks and the head are
// passed.
EpStream apply_finite_permutation(const EpStream& s, const FinitePermutation& pi);
EpStream apply_fixed_step_permutation(const EpStream& s, const FixedStepPermutation& pi);

}  // namespace longrun
