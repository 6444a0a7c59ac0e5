#pragma once

#include <utility>
#include <vector>

#include "topofilt/bht.hpp"

namespace topofilt {

// Output of the dimension-0 low-persistence filter. basins_filled lists the
// basin roots with 0 < pers < eps together with the level they were raised
// to, in host order; 0 <= filtered(v) - original(v) < eps for every vertex.
struct FilterResult {
    Signal filtered;
    double epsilon;
    std::vector<std::pair<int, ExtendedValue>> basins_filled;
};

// Raises every vertex to the largest linking value among its ancestors with
// persistence below eps (the value of the shallowest basin ceiling above it).
// Computed in one top-down pass carrying a running max; the max telescopes
// down the tree because persistence is non-increasing toward the leaves.
FilterResult lpf0(const Signal& signal, const Bht& bht, double eps);

// lpf0 output shifted down by eps/2; requires a finite signal. The result g
// satisfies -eps/2 <= g(v) - f(v) < eps/2 pointwise and removes the same
// intervals as lpf0.
Signal lpf0_shifted(const Signal& signal, const Bht& bht, double eps);

// Fills the basin of a non-root vertex v: sets signal's value at L(v) on v
// and all its tree descendants, leaving the rest unchanged. Composing fills
// over all vertices with pers < eps, in any order, reproduces lpf0.
Signal basin_fill(const Signal& signal, const Bht& bht, int v);

// Rebuilds a BHT on the filtered signal under the induced ordering and
// reports whether parent and linking maps are unchanged. Always true; exposed
// as a test oracle and debugging probe.
bool check_bht_stability(const Signal& signal, const Bht& bht, double eps);

}  // namespace topofilt
