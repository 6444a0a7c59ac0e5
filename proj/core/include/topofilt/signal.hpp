#pragma once

#include <vector>

#include "topofilt/extended_value.hpp"
#include "topofilt/graph.hpp"

namespace topofilt {

// A vertex-valued function over a graph. Edge values are not stored: they are
// always the maximum of the endpoint values (see edge_value). Values may be
// +inf (hole nodes of an induced graph) or -inf (negated duals); input
// parsers reject -inf, the type itself does not.
class Signal {
public:
    Signal(Graph graph, std::vector<ExtendedValue> values);

    const Graph& graph() const { return graph_; }
    ExtendedValue value(int v) const { return values_[v]; }
    const std::vector<ExtendedValue>& values() const { return values_; }
    int vertex_count() const { return graph_.vertex_count(); }
    bool all_finite() const;

    friend bool operator==(const Signal&, const Signal&) = default;

private:
    Graph graph_;
    std::vector<ExtendedValue> values_;
};

// max f(V(e)): the value a signal assigns to an edge.
ExtendedValue edge_value(const Signal& signal, int edge_id);

// Pointwise negation; swaps the infinities.
Signal negate(const Signal& signal);

}  // namespace topofilt
