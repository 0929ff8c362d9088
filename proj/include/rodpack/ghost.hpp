#pragma once

// Exact simulation of the 1D ghost hard-core process on an interval or a
// circle, run to its (a.s. finite) termination: every candidate rod, accepted
// or rejected, permanently ghosts its exclusion neighbourhood, and the run
// ends when no free component of length >= 2 remains.
//
// Two candidate schedules produce identically distributed terminal states:
//   naive       - candidates uniform on the whole domain, as defined;
//   accelerated - candidates uniform on the active region (the points whose
//                 exclusion interval is not yet fully ghosted). A candidate
//                 outside the active region changes nothing, so skipping
//                 those draws leaves the terminal law untouched.

#include <cstdint>
#include <functional>
#include <vector>

#include "rodpack/interval.hpp"

namespace rodpack {

class RngStream;

enum class Geometry { interval, circle };
enum class GhostMode { naive, accelerated };

struct GhostState {
    Geometry geometry = Geometry::interval;
    double L = 0.0;
    IntervalSet free_region;  // domain minus the ghosted region
    std::vector<double> rods;  // accepted centers, sorted
    std::uint64_t candidates_seen = 0;  // effective candidates in accelerated mode
    std::uint64_t accepted = 0;

    // The ghosted region Y, reconstructed from its complement.
    IntervalSet ghosted() const;
};

// Hook applied to each naive candidate before the placement rules; used by
// the rotation/seam property tests. Must be measure-preserving.
using CandidateTransform = std::function<double(double)>;

GhostState run_ghost_interval(double L, RngStream& rng,
                              GhostMode mode = GhostMode::accelerated,
                              const CandidateTransform& transform = nullptr);

GhostState run_ghost_circle(double L, RngStream& rng,
                            GhostMode mode = GhostMode::accelerated,
                            const CandidateTransform& transform = nullptr);

// Gaps between adjacent rods (centers cover [c-1, c+1]); boundary gaps are
// included on the interval, and the circle wraps.
std::vector<GapRecord> ghost_gaps(const GhostState& state);

double ghost_max_gap(const GhostState& state, bool include_boundary = true);

// Empirical frequency that candidate t = 1..t_max is accepted, over naive
// interval runs (candidate time is only meaningful in the naive schedule).
// Trial i draws from the substream (master_seed, i).
std::vector<double> acceptance_frequency(double L, int t_max, int trials,
                                         std::uint64_t master_seed);

// Frequency that candidate number t is accepted; runs that terminate before
// time t contribute zero.
double success_probability_empirical(double L, int t, int trials,
                                     std::uint64_t master_seed);

// Runs past this many candidates abort with an error; never reached in
// practice at desk scales.
inline constexpr std::uint64_t kGhostCandidateBudget = 1'000'000'000ull;

}  // namespace rodpack
