#pragma once

#include <optional>
#include <vector>

#include "topofilt/diagram.hpp"
#include "topofilt/ordering.hpp"

namespace topofilt {

// Basin hierarchy tree of a signal with respect to an ordering: a rooted tree
// over the vertices whose root is the order-minimal vertex, plus a linking
// vertex per non-root vertex. Each vertex's interval [f(v), f(L(v))) recovers
// the dimension-0 persistence diagram; the root contributes [f(root), inf).
class Bht {
public:
    const Signal& signal() const { return signal_; }
    const TotalOrder& order() const { return order_; }
    int vertex_count() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& parents() const { return parent_; }
    // Absent exactly at the root.
    const std::optional<int>& linking(int v) const { return linking_[v]; }
    const std::vector<std::optional<int>>& linkings() const { return linking_; }

    // f(L(v)) - f(v); +inf at the root (f of the empty set is +inf). Equal
    // values short-circuit to 0 so that infinite-valued vertices linked at
    // the same level count as trivial.
    ExtendedValue pers(int v) const;

private:
    Bht(Signal signal, TotalOrder order, std::vector<int> parent,
        std::vector<std::optional<int>> linking, int root);

    friend Bht build_bht(const Signal&, const TotalOrder&);

    Signal signal_;
    TotalOrder order_;
    std::vector<int> parent_;
    std::vector<std::optional<int>> linking_;
    int root_;
};

// Modified union-find over the edge sequence of the ordering: an edge merging
// two components re-parents the order-larger root under the order-smaller one
// and records the order-larger endpoint of the edge as the loser's linking
// vertex. The output parent map is written once per vertex; root lookups go
// through a separate path-compressed find structure.
Bht build_bht(const Signal& signal, const TotalOrder& order);

// { [f(v), f(L(v))) : v in V }, the root contributing [f(root), inf).
Diagram pd0_from_bht(const Bht& bht);

// All u with u <=_T v (including v) and pers(u) < eps, listed from v upward.
std::vector<int> ancestors_below(const Bht& bht, int v, double eps);

}  // namespace topofilt
