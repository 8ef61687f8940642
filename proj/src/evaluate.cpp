#include "longrun/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace longrun {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
}

double max_abs_value(const EpStream& s) {
  const double lo = to_double(s.min_value()), hi = to_double(s.max_value());
  return std::max(std::fabs(lo), std::fabs(hi));
}

}  // namespace

std::vector<double> DeltaGrid::deltas() const {
  if (j_lo < 1 || j_hi < j_lo) throw std::invalid_argument("bad delta grid range");
  std::vector<double> out;
  for (int j = j_lo; j <= j_hi; ++j) out.push_back(1.0 - std::ldexp(1.0, -j));
  return out;
}

Rational partial_mean(const EpStream& s, std::int64_t T) {
  if (T < 1) throw std::invalid_argument("partial_mean needs T >= 1");
  return s.partial_sum(T) / T;
}

Rational cesaro_average(const EpStream& s) { return s.cycle_mean(); }

Rational discounted_value_exact(const EpStream& s, const Rational& delta) {
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
  const std::int64_t h = s.head_length(), p = s.period();
  Rational head_part(0), pw(1);
  for (std::int64_t t = 1; t <= h; ++t) {
    head_part += pw * s.value_at(t);
    pw *= delta;
  }
  Rational cycle_poly(0), cw(1);
  for (std::int64_t j = 1; j <= p; ++j) {
    cycle_poly += cw * s.cycle()[static_cast<std::size_t>(j - 1)];
    cw *= delta;
  }
  // pw = delta^h, cw = delta^p
  return (1 - delta) * (head_part + pw * cycle_poly / (1 - cw));
}

double discounted_value(const EpStream& s, double delta) {
  check_delta(delta);
  const std::int64_t h = s.head_length(), p = s.period();
  long double head_part = 0.0L, pw = 1.0L;
  for (std::int64_t t = 1; t <= h; ++t) {
    head_part += pw * static_cast<long double>(to_double(s.value_at(t)));
    pw *= delta;
  }
  long double cycle_poly = 0.0L, cw = 1.0L;
  for (std::int64_t j = 1; j <= p; ++j) {
    cycle_poly += cw * static_cast<long double>(to_double(s.cycle()[static_cast<std::size_t>(j - 1)]));
    cw *= delta;
  }
  // 1 - delta^p computed without cancellation; matters for delta near 1.
  const long double one_minus_dp =
      -std::expm1(static_cast<long double>(p) * std::log(static_cast<long double>(delta)));
  const long double value =
      (1.0L - static_cast<long double>(delta)) * (head_part + pw * cycle_poly / one_minus_dp);
  return static_cast<double>(value);
}

Interval discounted_limit_interval(const EpStream& s, const DeltaGrid& grid) {
  (void)grid;  // the limit exists exactly; no estimation on this domain
  const double mu = to_double(cesaro_average(s));
  return {mu, mu};
}

std::pair<Rational, Rational> kstep_mean_bounds(const EpStream& s, int kmax,
                                                std::int64_t horizon) {
  (void)kmax;
  (void)horizon;
  // Every k-grid mean converges to the long-run average, so the sup of
  // liminfs and the inf of limsups coincide with it.
  const Rational mu = cesaro_average(s);
  return {mu, mu};
}

double abel_identity_residual(const EpStream& s, double delta, std::int64_t N) {
  check_delta(delta);
  if (N < 1) throw std::invalid_argument("abel_identity_residual needs N >= 1");
  const double B = max_abs_value(s);
  // Discarded tail of (1-d)^2 sum_{t>N} d^(t-1) t mu_t is at most
  // B * d^N * ((N+1)(1-d) + d); require it below 1e-10.
  const double tail =
      B * std::exp(static_cast<double>(N) * std::log(delta)) *
      (static_cast<double>(N + 1) * (1.0 - delta) + delta);
  if (!(tail < 1e-10))
    throw std::invalid_argument("N too small for the requested tolerance");

  long double acc = 0.0L, pw = 1.0L, running = 0.0L;
  for (std::int64_t t = 1; t <= N; ++t) {
    running += static_cast<long double>(to_double(s.value_at(t)));  // = t * mu_t
    acc += pw * running;
    pw *= delta;
  }
  const long double omd = 1.0L - static_cast<long double>(delta);
  const long double rhs = omd * omd * acc;
  const long double lhs = static_cast<long double>(discounted_value(s, delta));
  return static_cast<double>(std::fabs(lhs - rhs));
}

double partial_mean(const BoundedStream& s, std::int64_t T) {
  if (T < 1) throw std::invalid_argument("partial_mean needs T >= 1");
  long double sum = 0.0L;
  for (std::int64_t t = 1; t <= T; ++t) sum += s.value_at(t);
  return static_cast<double>(sum / static_cast<long double>(T));
}

Interval cesaro_estimate(const BoundedStream& s, std::int64_t k, std::int64_t horizon) {
  if (k < 1) throw std::invalid_argument("cesaro_estimate needs k >= 1");
  if (horizon < 10 * k)
    throw std::invalid_argument("cesaro_estimate needs horizon >= 10*k");
  const std::int64_t Tmax = horizon / k;
  const std::int64_t start = Tmax / 2 + 1;  // min/max taken over the last half
  long double sum = 0.0L;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  std::int64_t t = 0;
  for (std::int64_t T = 1; T <= Tmax; ++T) {
    for (std::int64_t i = 0; i < k; ++i) sum += s.value_at(++t);
    if (T >= start) {
      const double mu = static_cast<double>(sum / static_cast<long double>(t));
      lo = std::min(lo, mu);
      hi = std::max(hi, mu);
    }
  }
  return {lo, hi};
}

double discounted_value(const BoundedStream& s, double delta, double tol) {
  check_delta(delta);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double B = std::max(s.bound(), 1e-30);
  // Truncate once B * delta^N < tol; the discarded tail of (1-d) sum d^(t-1) u_t
  // is below that.
  std::int64_t N = 1;
  if (tol < B) N = static_cast<std::int64_t>(std::ceil(std::log(tol / B) / std::log(delta)));
  if (N < 1) N = 1;
  if (N > 500000000)
    throw std::invalid_argument("delta too close to 1 for the requested tolerance");
  long double acc = 0.0L, pw = 1.0L;
  for (std::int64_t t = 1; t <= N; ++t) {
    acc += pw * s.value_at(t);
    pw *= delta;
  }
  return static_cast<double>((1.0L - static_cast<long double>(delta)) * acc);
}

Interval discounted_limit_interval(const BoundedStream& s, const DeltaGrid& grid,
                                   double tol) {
  const std::vector<double> ds = grid.deltas();
  const int tail = std::min<int>(grid.tail_points, static_cast<int>(ds.size()));
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = ds.size() - static_cast<std::size_t>(tail); i < ds.size(); ++i) {
    const double v = discounted_value(s, ds[i], tol);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

std::pair<double, double> kstep_mean_bounds(const BoundedStream& s, int kmax,
                                            std::int64_t horizon) {
  if (kmax < 1) throw std::invalid_argument("kstep_mean_bounds needs kmax >= 1");
  double w1 = -std::numeric_limits<double>::infinity();
  double w4 = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= kmax; ++k) {
    const Interval est = cesaro_estimate(s, k, horizon);
    w1 = std::max(w1, est.lo);
    w4 = std::min(w4, est.hi);
  }
  return {w1, w4};
}

}  // namespace longrun
