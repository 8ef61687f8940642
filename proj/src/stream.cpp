#include "longrun/stream.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <utility>

namespace longrun {

namespace {

// Shortest d with cycle = (first d values) repeated. Divisor scan is enough
// at the cycle lengths this library works with.
std::size_t primitive_period(const std::vector<Rational>& cycle) {
  const std::size_t p = cycle.size();
  for (std::size_t d = 1; d <= p / 2; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = cycle[i] == cycle[i - d];
    if (repeats) return d;
  }
  return p;
}

}  // namespace

EpStream EpStream::make(std::vector<Rational> head, std::vector<Rational> cycle) {
  if (cycle.empty()) throw std::invalid_argument("EpStream cycle must be nonempty");

  const std::size_t d = primitive_period(cycle);
  cycle.resize(d);

  // Absorb a head tail that the cycle already produces. With h_m == c_p the
  // stream equals head h_1..h_{m-1} with cycle rotated one step right, and a
  // rotation of a primitive cycle stays primitive.
  while (!head.empty() && head.back() == cycle.back()) {
    head.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }
  return EpStream(std::move(head), std::move(cycle));
}

EpStream::EpStream(std::vector<Rational> head, std::vector<Rational> cycle)
    : head_(std::move(head)), cycle_(std::move(cycle)) {
  head_prefix_.reserve(head_.size() + 1);
  head_prefix_.emplace_back(0);
  for (const auto& v : head_) head_prefix_.push_back(head_prefix_.back() + v);
  cycle_prefix_.reserve(cycle_.size() + 1);
  cycle_prefix_.emplace_back(0);
  for (const auto& v : cycle_) cycle_prefix_.push_back(cycle_prefix_.back() + v);
}

const Rational& EpStream::value_at(std::int64_t t) const {
  if (t < 1) throw std::invalid_argument("stream index must be >= 1");
  const std::int64_t h = head_length();
  if (t <= h) return head_[static_cast<std::size_t>(t - 1)];
  return cycle_[static_cast<std::size_t>((t - h - 1) % period())];
}

Rational EpStream::partial_sum(std::int64_t T) const {
  if (T < 0) throw std::invalid_argument("partial_sum needs T >= 0");
  const std::int64_t h = head_length(), p = period();
  if (T <= h) return head_prefix_[static_cast<std::size_t>(T)];
  const std::int64_t full = (T - h) / p, rest = (T - h) % p;
  return head_prefix_.back() + Rational(full) * cycle_prefix_.back() +
         cycle_prefix_[static_cast<std::size_t>(rest)];
}

Rational EpStream::cycle_sum() const { return cycle_prefix_.back(); }

Rational EpStream::cycle_mean() const { return cycle_prefix_.back() / period(); }

Rational EpStream::min_value() const {
  Rational m = min_cycle();
  for (const auto& v : head_) m = std::min(m, v);
  return m;
}

Rational EpStream::max_value() const {
  Rational m = max_cycle();
  for (const auto& v : head_) m = std::max(m, v);
  return m;
}

Rational EpStream::min_cycle() const {
  return *std::min_element(cycle_.begin(), cycle_.end());
}

Rational EpStream::max_cycle() const {
  return *std::max_element(cycle_.begin(), cycle_.end());
}

EpStream constant_stream(const Rational& c) { return EpStream::make({}, {c}); }

EpStream add(const EpStream& a, const EpStream& b) {
  const std::int64_t H = std::max(a.head_length(), b.head_length());
  const std::int64_t P = std::lcm(a.period(), b.period());
  std::vector<Rational> head, cycle;
  head.reserve(static_cast<std::size_t>(H));
  cycle.reserve(static_cast<std::size_t>(P));
  for (std::int64_t t = 1; t <= H; ++t) head.push_back(a.value_at(t) + b.value_at(t));
  for (std::int64_t j = 1; j <= P; ++j)
    cycle.push_back(a.value_at(H + j) + b.value_at(H + j));
  return EpStream::make(std::move(head), std::move(cycle));
}

EpStream scale(const EpStream& s, const Rational& c) {
  std::vector<Rational> head = s.head(), cycle = s.cycle();
  for (auto& v : head) v *= c;
  for (auto& v : cycle) v *= c;
  return EpStream::make(std::move(head), std::move(cycle));
}

EpStream tail(const EpStream& s, std::int64_t T) {
  if (T < 0) throw std::invalid_argument("tail needs T >= 0");
  const std::int64_t H = std::max<std::int64_t>(s.head_length() - T, 0);
  std::vector<Rational> head, cycle;
  for (std::int64_t t = 1; t <= H; ++t) head.push_back(s.value_at(T + t));
  for (std::int64_t j = 1; j <= s.period(); ++j) cycle.push_back(s.value_at(T + H + j));
  return EpStream::make(std::move(head), std::move(cycle));
}

EpStream replicate_prefix(const EpStream& s, std::int64_t T) {
  if (T < 1) throw std::invalid_argument("replicate_prefix needs T >= 1");
  std::vector<Rational> cycle;
  cycle.reserve(static_cast<std::size_t>(T));
  for (std::int64_t t = 1; t <= T; ++t) cycle.push_back(s.value_at(t));
  return EpStream::make({}, std::move(cycle));
}

EpStream mean_complete(const EpStream& s, std::int64_t T) {
  if (T < 1) throw std::invalid_argument("mean_complete needs T >= 1");
  std::vector<Rational> head;
  head.reserve(static_cast<std::size_t>(T));
  for (std::int64_t t = 1; t <= T; ++t) head.push_back(s.value_at(t));
  return EpStream::make(std::move(head), {s.partial_sum(T) / T});
}

EpStream add_indicator(const EpStream& s, std::int64_t t, const Rational& alpha) {
  if (t < 1) throw std::invalid_argument("add_indicator needs t >= 1");
  const std::int64_t H = std::max(s.head_length(), t);
  std::vector<Rational> head, cycle;
  for (std::int64_t i = 1; i <= H; ++i) head.push_back(s.value_at(i));
  head[static_cast<std::size_t>(t - 1)] += alpha;
  for (std::int64_t j = 1; j <= s.period(); ++j) cycle.push_back(s.value_at(H + j));
  return EpStream::make(std::move(head), std::move(cycle));
}

EpStream transfer(const EpStream& s, std::int64_t i, std::int64_t j, const Rational& beta) {
  if (i == j) throw std::invalid_argument("transfer needs distinct coordinates");
  return add_indicator(add_indicator(s, i, beta), j, -beta);
}

BoundedStream::BoundedStream(std::function<double(std::int64_t)> rule, double bound,
                             std::string label)
    : rule_(std::move(rule)), bound_(bound), label_(std::move(label)) {
  if (!(bound_ >= 0.0)) throw std::invalid_argument("BoundedStream bound must be >= 0");
}

double BoundedStream::value_at(std::int64_t t) const {
  if (t < 1) throw std::invalid_argument("stream index must be >= 1");
  const double v = rule_(t);
  // The negated comparison also rejects NaN.
  if (!(std::fabs(v) <= bound_))
    throw BoundViolation(label_ + ": |u_" + std::to_string(t) + "| = " +
                         std::to_string(v) + " exceeds bound " + std::to_string(bound_));
  return v;
}

BoundedStream harmonic_shift(double c) {
  return BoundedStream([c](std::int64_t t) { return c + 1.0 / static_cast<double>(t); },
                       std::fabs(c) + 1.0,
                       "harmonic_shift(c=" + std::to_string(c) + ")");
}

BoundedStream doubling_blocks() {
  return BoundedStream(
      [](std::int64_t t) {
        const int block = std::bit_width(static_cast<std::uint64_t>(t)) - 1;
        return static_cast<double>(block & 1);
      },
      1.0, "doubling_blocks");
}

BoundedStream replicate_prefix(const BoundedStream& s, std::int64_t T) {
  if (T < 1) throw std::invalid_argument("replicate_prefix needs T >= 1");
  return BoundedStream(
      [s, T](std::int64_t t) { return s.value_at((t - 1) % T + 1); }, s.bound(),
      s.label() + "[rep " + std::to_string(T) + "]");
}

}  // namespace longrun
