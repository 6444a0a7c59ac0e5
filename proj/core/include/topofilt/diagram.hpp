#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "topofilt/extended_value.hpp"

namespace topofilt {

// A persistence interval [birth, death) in homological dimension 0 or 1.
class Interval {
public:
    Interval(ExtendedValue birth, ExtendedValue death, int dim);

    ExtendedValue birth() const { return birth_; }
    ExtendedValue death() const { return death_; }
    int dim() const { return dim_; }

    bool trivial() const { return birth_ == death_; }
    // death - birth; equal endpoints give 0 even at +/-inf, an infinite death
    // (or infinite-below birth) gives +inf.
    ExtendedValue persistence() const;

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;

private:
    ExtendedValue birth_, death_;
    int dim_;
};

// Multiset of persistence intervals. Equality of diagrams is order-insensitive
// via canonical sorting; the library-wide equivalence `diagram_equiv` further
// ignores trivial intervals.
struct Diagram {
    std::vector<Interval> intervals;
};

Diagram canonicalized(Diagram d);
Diagram nontrivial(const Diagram& d);
std::size_t nontrivial_count(const Diagram& d);

// Multiset equality after discarding all intervals with birth == death.
bool diagram_equiv(const Diagram& a, const Diagram& b);

enum class ThresholdMode { at_least, below };

// Keeps intervals whose persistence is >= eps (at_least) or < eps (below).
Diagram diagram_threshold(const Diagram& d, double eps, ThresholdMode mode);

// True iff the nontrivial intervals of g inject into the nontrivial intervals
// of f with no persistence increase; decided by maximum bipartite matching.
bool dominates(const Diagram& g, const Diagram& f);
bool dominates(const std::pair<Diagram, Diagram>& g, const std::pair<Diagram, Diagram>& f);

}  // namespace topofilt
