#pragma once

// Exact sampling of saturated classical 1D hard-core packings of length-2
// rods on [0, L], plus gap statistics. Two samplers produce the same
// distribution: the split sampler places the first rod and recurses on the
// two remaining segments; the naive sampler replays the candidate sequence
// and detects saturation structurally from the feasible left-endpoint set.

#include <cstdint>
#include <vector>

#include "rodpack/interval.hpp"

namespace rodpack {

class RngStream;

struct PackingState {
    double L = 0.0;
    std::vector<double> rods;  // sorted left endpoints; each rod is [p, p+2]
    IntervalSet ghosts;        // empty in classical mode
    std::uint64_t candidates_seen = 0;
    std::uint64_t accepted = 0;
};

// Saturated configuration via first-rod splitting. Segments are processed
// left before right so a given stream reproduces the identical packing.
PackingState saturate_split(double L, RngStream& rng);

// Saturated configuration via the candidate-rejection dynamics. The feasible
// left-endpoint region is maintained as an IntervalSet and the run stops
// exactly when its measure vanishes.
PackingState saturate_naive(double L, RngStream& rng);

// Maximal empty segments: between adjacent rods and against both boundaries.
std::vector<GapRecord> gaps_of(const PackingState& state);

// G(L, r) for this realization. Boundary gaps count unless excluded.
int count_gaps_at_least(const PackingState& state, double r,
                        bool include_boundary = true);

double max_gap(const PackingState& state, bool include_boundary = true);

}  // namespace rodpack
