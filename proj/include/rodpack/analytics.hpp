#pragma once

// Closed-form ghost-model quantities: per-candidate success probability,
// expected rod counts, the occupancy profile on the interval, and the pair
// correlation on the circle. Evaluation below each formula's validity floor
// is an error, not
// an extrapolation.

#include <cstdint>

#include "rodpack/ghost.hpp"

namespace rodpack {

// P_s(t) = 2((L-3)^t - (L-4)^t)/(t L^t) + ((L-4)/L)^t, for t >= 1, L >= 6.
double ghost_success_prob(std::int64_t t, double L);

// Truncated sum of P_s(t) with a geometric tail bound below `tol`.
double ghost_success_prob_sum(double L, double tol = 1e-9);

// Interval: L/4 + ln(16/9) - 1 (L >= 6). Circle: L/4 (L > 4).
double ghost_expected_rods(double L, Geometry geometry);

// Probability that point x is covered at termination on [0, L], L >= 10;
// symmetric about L/2.
double ghost_occupancy(double x, double L);

// Probability that two circle points at distance x are both covered
// (L-independent for x <= L/2, L >= 20).
double ghost_pair_correlation(double x);

// Occupancy at distance x from a rod edge that covered the reference point
// with protrusion sigma in [0, 2]; the sigma-average over [0,2] of this
// kernel reproduces ghost_pair_correlation (up to the 1/2 coverage factor),
// which the tests use as an independent check of the published piecewise
// form.
double ghost_pair_given_cut(double x, double sigma);

}  // namespace rodpack
