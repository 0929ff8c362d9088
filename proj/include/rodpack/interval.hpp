#pragma once

// One-dimensional interval arithmetic used by the rod-packing simulators.
// An IntervalSet is kept canonical at all times: parts are sorted, pairwise
// disjoint and non-adjacent (touching parts are merged), so measure queries
// and complement construction are unambiguous.

#include <map>
#include <vector>

namespace rodpack {

class RngStream;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool operator==(const Interval&) const = default;
};

struct GapRecord {
    double lo = 0.0;
    double hi = 0.0;
    double length = 0.0;
    bool touches_boundary = false;
};

// Tolerance for measure comparisons, relative to the domain length.
inline double measure_tol(double domain_length) {
    return 1e-12 * (domain_length < 1.0 ? 1.0 : domain_length);
}

class IntervalSet {
  public:
    IntervalSet() = default;
    explicit IntervalSet(Interval iv) { insert(iv.lo, iv.hi); }

    // Union with [lo, hi]; merges overlapping and adjacent parts.
    void insert(double lo, double hi);

    // Removes [lo, hi]. Pieces whose length drops below `drop_tol` are
    // discarded so measure-zero slivers cannot accumulate.
    void subtract(double lo, double hi, double drop_tol = 0.0);

    // subtract() variant reporting the parts removed and the trimmed parts
    // created, so callers can maintain derived per-part bookkeeping.
    void subtract_report(double lo, double hi, double drop_tol,
                         std::vector<Interval>& removed,
                         std::vector<Interval>& added);

    bool contains(double x) const;

    // Whole closed interval [lo, hi] inside one part?
    bool covers(double lo, double hi) const;

    double measure() const { return measure_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    std::vector<Interval> parts() const;
    const std::map<double, double>& raw() const { return parts_; }

    bool operator==(const IntervalSet& o) const { return parts_ == o.parts_; }

  private:
    std::map<double, double> parts_;  // lo -> hi
    double measure_ = 0.0;
};

// Canonical union of `set` with the open ball (center-radius, center+radius)
// clipped to `domain`. Throws std::invalid_argument if center lies outside
// the domain or radius <= 0.
IntervalSet insert_dilated(IntervalSet set, double center, double radius,
                           Interval domain);

// Maximal positive-measure intervals of domain \ set, in increasing order.
std::vector<Interval> complement_components(const IntervalSet& set,
                                            Interval domain);

// {x in domain : dist(x, set) < radius}, canonical.
IntervalSet dilate(const IntervalSet& set, double radius, Interval domain);

// Inverse-transform sample of a uniform point on a union of intervals.
// Throws std::invalid_argument on empty support.
double sample_uniform(const std::vector<Interval>& components, RngStream& rng);

}  // namespace rodpack
