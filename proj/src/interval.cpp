#include "rodpack/interval.hpp"

#include <algorithm>
#include <stdexcept>

#include "rodpack/rng.hpp"

namespace rodpack {

void IntervalSet::insert(double lo, double hi) {
    if (!(lo < hi)) return;
    // First part that could touch [lo, hi]: predecessor included, since its
    // hi may reach lo.
    auto it = parts_.upper_bound(lo);
    if (it != parts_.begin()) {
        auto prev = std::prev(it);
        if (prev->second >= lo) it = prev;
    }
    while (it != parts_.end() && it->first <= hi) {
        lo = std::min(lo, it->first);
        hi = std::max(hi, it->second);
        measure_ -= it->second - it->first;
        it = parts_.erase(it);
    }
    parts_.emplace(lo, hi);
    measure_ += hi - lo;
}

void IntervalSet::subtract(double lo, double hi, double drop_tol) {
    std::vector<Interval> removed, added;
    subtract_report(lo, hi, drop_tol, removed, added);
}

void IntervalSet::subtract_report(double lo, double hi, double drop_tol,
                                  std::vector<Interval>& removed,
                                  std::vector<Interval>& added) {
    removed.clear();
    added.clear();
    if (!(lo < hi)) return;
    auto it = parts_.upper_bound(lo);
    if (it != parts_.begin()) {
        auto prev = std::prev(it);
        if (prev->second > lo) it = prev;
    }
    std::vector<Interval> keep;
    while (it != parts_.end() && it->first < hi) {
        const Interval part{it->first, it->second};
        removed.push_back(part);
        measure_ -= part.length();
        it = parts_.erase(it);
        if (part.lo < lo && lo - part.lo > drop_tol)
            keep.push_back({part.lo, lo});
        if (part.hi > hi && part.hi - hi > drop_tol)
            keep.push_back({hi, part.hi});
    }
    for (const Interval& p : keep) {
        parts_.emplace(p.lo, p.hi);
        measure_ += p.length();
        added.push_back(p);
    }
}

bool IntervalSet::contains(double x) const {
    auto it = parts_.upper_bound(x);
    if (it == parts_.begin()) return false;
    return std::prev(it)->second >= x;
}

bool IntervalSet::covers(double lo, double hi) const {
    auto it = parts_.upper_bound(lo);
    if (it == parts_.begin()) return false;
    auto p = std::prev(it);
    return p->first <= lo && p->second >= hi;
}

std::vector<Interval> IntervalSet::parts() const {
    std::vector<Interval> out;
    out.reserve(parts_.size());
    for (const auto& [lo, hi] : parts_) out.push_back({lo, hi});
    return out;
}

IntervalSet insert_dilated(IntervalSet set, double center, double radius,
                           Interval domain) {
    if (!(radius > 0.0)) throw std::invalid_argument("insert_dilated: radius must be > 0");
    if (!domain.contains(center))
        throw std::invalid_argument("insert_dilated: center outside domain");
    set.insert(std::max(center - radius, domain.lo),
               std::min(center + radius, domain.hi));
    return set;
}

std::vector<Interval> complement_components(const IntervalSet& set,
                                            Interval domain) {
    const double tol = measure_tol(domain.length());
    std::vector<Interval> out;
    double cursor = domain.lo;
    for (const auto& [lo, hi] : set.raw()) {
        if (lo - cursor > tol) out.push_back({cursor, lo});
        cursor = std::max(cursor, hi);
    }
    if (domain.hi - cursor > tol) out.push_back({cursor, domain.hi});
    return out;
}

IntervalSet dilate(const IntervalSet& set, double radius, Interval domain) {
    if (radius < 0.0) throw std::invalid_argument("dilate: radius must be >= 0");
    IntervalSet out;
    for (const auto& [lo, hi] : set.raw())
        out.insert(std::max(lo - radius, domain.lo),
                   std::min(hi + radius, domain.hi));
    return out;
}

double sample_uniform(const std::vector<Interval>& components, RngStream& rng) {
    double total = 0.0;
    for (const Interval& c : components) total += c.length();
    if (!(total > 0.0))
        throw std::invalid_argument("sample_uniform: empty support");
    double u = rng.uniform01() * total;
    for (const Interval& c : components) {
        if (u < c.length()) {
            const double x = c.lo + u;
            return x < c.hi ? x : c.lo;  // guard rounding onto the endpoint
        }
        u -= c.length();
    }
    // fp accumulation can push u past the last component by an ulp
    const Interval& last = components.back();
    return 0.5 * (last.lo + last.hi);
}

}  // namespace rodpack
