#include "longrun/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace longrun {

namespace {

void check_bijection(const std::vector<std::int64_t>& mapping, const char* what) {
  const std::int64_t n = static_cast<std::int64_t>(mapping.size());
  std::vector<bool> seen(mapping.size(), false);
  for (std::int64_t v : mapping) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument(std::string(what) + " is not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

}  // namespace

FinitePermutation::FinitePermutation(std::vector<std::int64_t> mapping)
    : mapping_(std::move(mapping)) {
  check_bijection(mapping_, "finite permutation");
}

FinitePermutation FinitePermutation::identity(std::int64_t horizon) {
  std::vector<std::int64_t> m(static_cast<std::size_t>(horizon));
  std::iota(m.begin(), m.end(), std::int64_t{1});
  return FinitePermutation(std::move(m));
}

FinitePermutation FinitePermutation::swap_coords(std::int64_t i, std::int64_t j) {
  if (i < 1 || j < 1 || i == j) throw std::invalid_argument("swap needs distinct indices >= 1");
  std::vector<std::int64_t> m(static_cast<std::size_t>(std::max(i, j)));
  std::iota(m.begin(), m.end(), std::int64_t{1});
  std::swap(m[static_cast<std::size_t>(i - 1)], m[static_cast<std::size_t>(j - 1)]);
  return FinitePermutation(std::move(m));
}

FixedStepPermutation::FixedStepPermutation(std::int64_t step,
                                           std::vector<std::vector<std::int64_t>> blocks,
                                           std::vector<std::int64_t> tail_block)
    : step_(step), blocks_(std::move(blocks)), tail_block_(std::move(tail_block)) {
  if (step_ < 1) throw std::invalid_argument("fixed-step permutation needs step >= 1");
  if (static_cast<std::int64_t>(tail_block_.size()) != step_)
    throw std::invalid_argument("tail block size must equal step");
  check_bijection(tail_block_, "tail block");
  for (const auto& b : blocks_) {
    if (static_cast<std::int64_t>(b.size()) != step_)
      throw std::invalid_argument("block size must equal step");
    check_bijection(b, "block");
  }
}

FixedStepPermutation FixedStepPermutation::block_identity(std::int64_t step) {
  std::vector<std::int64_t> id(static_cast<std::size_t>(step));
  std::iota(id.begin(), id.end(), std::int64_t{1});
  return FixedStepPermutation(step, {}, std::move(id));
}

EpStream apply_finite_permutation(const EpStream& s, const FinitePermutation& pi) {
  // Beyond max(horizon, head length) nothing moves and the source is already
  // cyclic, so the result head covers exactly that prefix.
  const std::int64_t H = std::max(pi.horizon(), s.head_length());
  std::vector<Rational> head, cycle;
  for (std::int64_t t = 1; t <= H; ++t) head.push_back(s.value_at(pi.apply(t)));
  for (std::int64_t j = 1; j <= s.period(); ++j) cycle.push_back(s.value_at(H + j));
  return EpStream::make(std::move(head), std::move(cycle));
}

EpStream apply_fixed_step_permutation(const EpStream& s, const FixedStepPermutation& pi) {
  // Past the explicit blocks and the head, the permuted stream repeats with
  // period lcm(p, k): the tail bijection recurs every k steps and the source
  // values recur every p.
  const std::int64_t k = pi.step();
  const std::int64_t head_blocks = (s.head_length() + k - 1) / k;
  const std::int64_t S = k * std::max(pi.block_count(), head_blocks);
  const std::int64_t L = std::lcm(s.period(), k);
  std::vector<Rational> head, cycle;
  for (std::int64_t t = 1; t <= S; ++t) head.push_back(s.value_at(pi.apply(t)));
  for (std::int64_t j = 1; j <= L; ++j) cycle.push_back(s.value_at(pi.apply(S + j)));
  return EpStream::make(std::move(head), std::move(cycle));
}

}  // namespace longrun
