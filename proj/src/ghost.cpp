#include "rodpack/ghost.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rodpack/rng.hpp"

namespace rodpack {

IntervalSet GhostState::ghosted() const {
    IntervalSet y;
    for (const Interval& c :
         complement_components(free_region, {0.0, L}))
        y.insert(c.lo, c.hi);
    return y;
}

namespace {

class GhostRunner {
  public:
    GhostRunner(Geometry geom, double L) : tol_(measure_tol(L)) {
        st_.geometry = geom;
        st_.L = L;
        st_.free_region.insert(0.0, L);
        lengths_.insert(L);
    }

    using AcceptObserver = std::function<void(std::uint64_t)>;

    GhostState run(RngStream& rng, GhostMode mode,
                   const CandidateTransform& transform,
                   const AcceptObserver& on_accept = nullptr) {
        const double L = st_.L;
        while (max_component() >= 2.0) {
            if (st_.candidates_seen >= kGhostCandidateBudget)
                throw std::runtime_error("ghost run exceeded candidate budget");
            double x;
            if (mode == GhostMode::naive) {
                x = rng.uniform(0.0, L);
                if (transform) x = transform(x);
            } else {
                x = sample_uniform(active_components(), rng);
            }
            ++st_.candidates_seen;
            bool accept;
            if (st_.geometry == Geometry::interval) {
                accept = x >= 1.0 && x <= L - 1.0 &&
                         st_.free_region.covers(x - 1.0, x + 1.0);
            } else {
                accept = circle_free(x);
            }
            if (accept) {
                st_.rods.push_back(x);
                if (on_accept) on_accept(st_.candidates_seen);
            }
            ghost(x);
        }
        std::sort(st_.rods.begin(), st_.rods.end());
        st_.accepted = st_.rods.size();
        return std::move(st_);
    }

  private:
    double max_component() const {
        if (lengths_.empty()) return 0.0;
        double best = *lengths_.rbegin();
        if (st_.geometry == Geometry::circle && st_.free_region.size() >= 2) {
            // components touching the seam join circularly
            const auto& raw = st_.free_region.raw();
            const auto& first = *raw.begin();
            const auto& last = *raw.rbegin();
            if (first.first <= tol_ && last.second >= st_.L - tol_)
                best = std::max(best, (first.second - first.first) +
                                          (last.second - last.first));
        }
        return best;
    }

    bool circle_free(double x) const {
        const double L = st_.L;
        if (x - 1.0 < 0.0)
            return st_.free_region.covers(0.0, x + 1.0) &&
                   st_.free_region.covers(x - 1.0 + L, L);
        if (x + 1.0 > L)
            return st_.free_region.covers(x - 1.0, L) &&
                   st_.free_region.covers(0.0, x + 1.0 - L);
        return st_.free_region.covers(x - 1.0, x + 1.0);
    }

    void ghost(double x) {
        const double L = st_.L;
        if (st_.geometry == Geometry::interval) {
            remove(std::max(x - 1.0, 0.0), std::min(x + 1.0, L));
            return;
        }
        if (x - 1.0 < 0.0) {
            remove(0.0, x + 1.0);
            remove(x - 1.0 + L, L);
        } else if (x + 1.0 > L) {
            remove(x - 1.0, L);
            remove(0.0, x + 1.0 - L);
        } else {
            remove(x - 1.0, x + 1.0);
        }
    }

    void remove(double lo, double hi) {
        st_.free_region.subtract_report(lo, hi, tol_, removed_, added_);
        for (const Interval& p : removed_)
            lengths_.erase(lengths_.find(p.length()));
        for (const Interval& p : added_) lengths_.insert(p.length());
    }

    // Active region: points whose exclusion interval still overlaps the free
    // region, i.e. the radius-1 dilation of the free region.
    std::vector<Interval> active_components() const {
        const double L = st_.L;
        std::vector<Interval> out;
        if (st_.geometry == Geometry::interval) {
            for (const auto& [lo, hi] : st_.free_region.raw()) {
                const double a = std::max(lo - 1.0, 0.0);
                const double b = std::min(hi + 1.0, L);
                if (!out.empty() && a <= out.back().hi)
                    out.back().hi = std::max(out.back().hi, b);
                else
                    out.push_back({a, b});
            }
            return out;
        }
        // circle: dilate with wraparound, then merge via canonical insert
        IntervalSet acc;
        for (const auto& [lo, hi] : st_.free_region.raw()) {
            const double a = lo - 1.0, b = hi + 1.0;
            if (b - a >= L) {
                acc.insert(0.0, L);
                break;
            }
            if (a < 0.0) {
                acc.insert(0.0, b);
                acc.insert(a + L, L);
            } else if (b > L) {
                acc.insert(a, L);
                acc.insert(0.0, b - L);
            } else {
                acc.insert(a, b);
            }
        }
        return acc.parts();
    }

    GhostState st_;
    std::multiset<double> lengths_;
    double tol_;
    std::vector<Interval> removed_, added_;
};

}  // namespace

GhostState run_ghost_interval(double L, RngStream& rng, GhostMode mode,
                              const CandidateTransform& transform) {
    if (!(L > 0.0))
        throw std::invalid_argument("run_ghost_interval: L must be > 0");
    return GhostRunner(Geometry::interval, L).run(rng, mode, transform);
}

GhostState run_ghost_circle(double L, RngStream& rng, GhostMode mode,
                            const CandidateTransform& transform) {
    if (!(L > 4.0))
        throw std::invalid_argument("run_ghost_circle: L must be > 4");
    return GhostRunner(Geometry::circle, L).run(rng, mode, transform);
}

std::vector<GapRecord> ghost_gaps(const GhostState& state) {
    const double tol = measure_tol(state.L);
    std::vector<GapRecord> gaps;
    if (state.geometry == Geometry::interval) {
        double cursor = 0.0;
        auto emit = [&](double lo, double hi) {
            if (hi - lo > tol)
                gaps.push_back({lo, hi, hi - lo, lo == 0.0 || hi == state.L});
        };
        for (double c : state.rods) {
            emit(cursor, c - 1.0);
            cursor = c + 1.0;
        }
        emit(cursor, state.L);
        return gaps;
    }
    const auto& rods = state.rods;
    if (rods.empty()) {
        gaps.push_back({0.0, state.L, state.L, false});
        return gaps;
    }
    for (std::size_t i = 0; i < rods.size(); ++i) {
        const double lo = rods[i] + 1.0;
        double hi = (i + 1 < rods.size()) ? rods[i + 1] - 1.0
                                          : rods.front() - 1.0 + state.L;
        if (hi - lo > tol) gaps.push_back({lo, hi, hi - lo, false});
    }
    return gaps;
}

double ghost_max_gap(const GhostState& state, bool include_boundary) {
    double best = 0.0;
    for (const GapRecord& g : ghost_gaps(state))
        if (include_boundary || !g.touches_boundary)
            best = std::max(best, g.length);
    return best;
}

std::vector<double> acceptance_frequency(double L, int t_max, int trials,
                                         std::uint64_t master_seed) {
    if (t_max < 1 || trials < 1)
        throw std::invalid_argument(
            "acceptance_frequency: t_max and trials must be >= 1");
    std::vector<std::int64_t> hits(std::size_t(t_max), 0);
    for (int i = 0; i < trials; ++i) {
        RngStream sub(master_seed, std::uint64_t(i));
        GhostRunner runner(Geometry::interval, L);
        runner.run(sub, GhostMode::naive, nullptr, [&](std::uint64_t t) {
            if (t <= std::uint64_t(t_max)) ++hits[std::size_t(t) - 1];
        });
    }
    std::vector<double> freq(std::size_t(t_max));
    for (int t = 0; t < t_max; ++t)
        freq[std::size_t(t)] = double(hits[std::size_t(t)]) / trials;
    return freq;
}

double success_probability_empirical(double L, int t, int trials,
                                     std::uint64_t master_seed) {
    if (t < 1)
        throw std::invalid_argument(
            "success_probability_empirical: t must be >= 1");
    return acceptance_frequency(L, t, trials, master_seed)[std::size_t(t) - 1];
}

}  // namespace rodpack
