#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "longrun/rational.hpp"
#include "longrun/stream.hpp"

namespace longrun {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Geometric grid delta_j = 1 - 2^-j for j in [j_lo, j_hi]. Limit estimates
// use the last tail_points grid values.
struct DeltaGrid {
  int j_lo = 4;
  int j_hi = 20;
  int tail_points = 8;
  std::vector<double> deltas() const;
};

// ---- exact evaluators on EpStream ----

// mu_T = (1/T) * sum of the first T values, T >= 1.
Rational partial_mean(const EpStream& s, std::int64_t T);

// Long-run average mu_inf = lim mu_T. For an eventually periodic stream the
// limit always exists and equals the cycle mean.
Rational cesaro_average(const EpStream& s);

// sigma_delta = (1-delta) * sum delta^(t-1) u_t, closed form:
// (1-delta) * [head part + delta^h * (cycle polynomial)/(1-delta^p)].
// Requires 0 < delta < 1.
Rational discounted_value_exact(const EpStream& s, const Rational& delta);
double discounted_value(const EpStream& s, double delta);

// liminf/limsup of sigma_delta as delta -> 1. On EpStream the limit exists and
// equals the long-run average, so the exact value replaces grid estimation and
// both endpoints coincide.
Interval discounted_limit_interval(const EpStream& s, const DeltaGrid& grid = {});

// (W1, W4) = (sup_k liminf_T mu_{kT}, inf_k limsup_T mu_{kT}). Exact on
// EpStream; both collapse to the long-run average. kmax and horizon are
// accepted for interface parity with the bounded overload and ignored.
std::pair<Rational, Rational> kstep_mean_bounds(const EpStream& s, int kmax,
                                                std::int64_t horizon);

// |sigma_delta - (1-delta)^2 * sum_{t<=N} delta^(t-1) * t * mu_t|. The two
// sides are an exact identity in the limit N -> infinity; the residual is pure
// truncation plus rounding. Throws std::invalid_argument when N is too small
// for the truncated tail to fall below 1e-10.
double abel_identity_residual(const EpStream& s, double delta, std::int64_t N);

// ---- numeric evaluators on BoundedStream ----

double partial_mean(const BoundedStream& s, std::int64_t T);

// Samples mu_{kT} for T = 1..floor(horizon/k) and returns (min, max) over the
// last half of the sampled range. Estimates liminf/limsup along the k-grid.
// Requires horizon >= 10*k.
Interval cesaro_estimate(const BoundedStream& s, std::int64_t k, std::int64_t horizon);

// Truncated direct sum; truncation point chosen so the discarded tail is below
// tol in absolute value.
double discounted_value(const BoundedStream& s, double delta, double tol = 1e-8);

// (min, max) of sigma_delta over the tail of the grid. Estimate only.
Interval discounted_limit_interval(const BoundedStream& s, const DeltaGrid& grid = {},
                                   double tol = 1e-8);

// (W1, W4) estimates: sup over k <= kmax of the lower cesaro_estimate
// endpoints, inf over k of the upper endpoints.
std::pair<double, double> kstep_mean_bounds(const BoundedStream& s, int kmax,
                                            std::int64_t horizon);

}  // namespace longrun
