#include "topofilt/signal.hpp"

#include <algorithm>

#include "topofilt/errors.hpp"

namespace topofilt {

Signal::Signal(Graph graph, std::vector<ExtendedValue> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != graph_.vertex_count())
        throw ValidationError("signal: one value per vertex required");
}

bool Signal::all_finite() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const ExtendedValue& v) { return v.finite(); });
}

ExtendedValue edge_value(const Signal& signal, int edge_id) {
    const auto& [u, v] = signal.graph().edge(edge_id);
    return std::max(signal.value(u), signal.value(v));
}

Signal negate(const Signal& signal) {
    std::vector<ExtendedValue> values;
    values.reserve(signal.values().size());
    for (const auto& v : signal.values()) values.push_back(-v);
    return Signal(signal.graph(), std::move(values));
}

}  // namespace topofilt
