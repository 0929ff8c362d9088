#include "rodpack/classical.hpp"

#include <algorithm>
#include <stdexcept>

#include "rodpack/rng.hpp"

namespace rodpack {

PackingState saturate_split(double L, RngStream& rng) {
    if (L < 0.0) throw std::invalid_argument("saturate_split: L must be >= 0");
    PackingState st;
    st.L = L;
    std::vector<Interval> stack;
    if (L >= 2.0) stack.push_back({0.0, L});
    while (!stack.empty()) {
        const Interval seg = stack.back();
        stack.pop_back();
        const double x = seg.lo + rng.uniform01() * (seg.length() - 2.0);
        st.rods.push_back(x);
        ++st.candidates_seen;
        // right pushed first so the left segment is drawn next
        if (seg.hi - (x + 2.0) >= 2.0) stack.push_back({x + 2.0, seg.hi});
        if (x - seg.lo >= 2.0) stack.push_back({seg.lo, x});
    }
    std::sort(st.rods.begin(), st.rods.end());
    st.accepted = st.rods.size();
    return st;
}

PackingState saturate_naive(double L, RngStream& rng) {
    if (L < 0.0) throw std::invalid_argument("saturate_naive: L must be >= 0");
    PackingState st;
    st.L = L;
    if (L < 2.0) return st;
    const double tol = measure_tol(L);
    IntervalSet feasible;  // feasible left endpoints
    feasible.insert(0.0, L - 2.0);
    const bool degenerate = L - 2.0 <= tol;  // only p = 0 fits
    while (degenerate ? st.rods.empty() : feasible.measure() > tol) {
        const double p = degenerate ? 0.0 : rng.uniform(0.0, L - 2.0);
        ++st.candidates_seen;
        if (degenerate || feasible.contains(p)) {
            st.rods.push_back(p);
            feasible.subtract(p - 2.0, p + 2.0, tol);
        }
    }
    std::sort(st.rods.begin(), st.rods.end());
    st.accepted = st.rods.size();
    return st;
}

std::vector<GapRecord> gaps_of(const PackingState& state) {
    const double tol = measure_tol(state.L);
    std::vector<GapRecord> gaps;
    double cursor = 0.0;
    auto emit = [&](double lo, double hi) {
        if (hi - lo > tol)
            gaps.push_back({lo, hi, hi - lo, lo == 0.0 || hi == state.L});
    };
    for (double p : state.rods) {
        emit(cursor, p);
        cursor = p + 2.0;
    }
    emit(cursor, state.L);
    return gaps;
}

int count_gaps_at_least(const PackingState& state, double r,
                        bool include_boundary) {
    if (!(r > 0.0))
        throw std::invalid_argument("count_gaps_at_least: r must be > 0");
    int n = 0;
    for (const GapRecord& g : gaps_of(state))
        if (g.length >= r && (include_boundary || !g.touches_boundary)) ++n;
    return n;
}

double max_gap(const PackingState& state, bool include_boundary) {
    double best = 0.0;
    for (const GapRecord& g : gaps_of(state))
        if (include_boundary || !g.touches_boundary)
            best = std::max(best, g.length);
    return best;
}

}  // namespace rodpack
