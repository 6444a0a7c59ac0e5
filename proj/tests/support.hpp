#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "topofilt/bht.hpp"
#include "topofilt/diagram.hpp"
#include "topofilt/instances.hpp"
#include "topofilt/oracle.hpp"

namespace testsupport {

using namespace topofilt;

inline ExtendedValue inf() { return ExtendedValue::infinity(); }

inline Interval iv(ExtendedValue birth, ExtendedValue death, int dim = 0) {
    return Interval(birth, death, dim);
}

inline Diagram diag(std::vector<Interval> intervals) {
    Diagram d;
    d.intervals = std::move(intervals);
    return d;
}

inline Signal path_signal(const std::vector<double>& values) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1);
    std::vector<ExtendedValue> vals(values.begin(), values.end());
    return Signal(Graph(static_cast<int>(values.size()), std::move(edges)), std::move(vals));
}

// Order-position-minimal vertex of each component of a subgraph, keyed by the
// component label from connected_components.
inline std::map<int, int> component_minima(const Subgraph& sub, const TotalOrder& order) {
    const std::vector<int> labels = connected_components(sub);
    std::map<int, int> minima;
    for (int v : sub.vertices) {
        const int label = labels[v];
        auto it = minima.find(label);
        if (it == minima.end() || order.vertex_position(v) < order.vertex_position(it->second))
            minima[label] = v;
    }
    return minima;
}

// All BHT descendants of v, including v.
inline std::vector<int> descendants(const Bht& bht, int v) {
    std::vector<char> mark(static_cast<std::size_t>(bht.vertex_count()), 0);
    mark[v] = 1;
    for (const Cell c : bht.order().cells()) {
        if (c.kind != CellKind::vertex) continue;
        const int u = c.index;
        if (u == bht.root() || u == v) continue;
        if (mark[bht.parent(u)]) mark[u] = 1;
    }
    std::vector<int> out;
    for (int u = 0; u < bht.vertex_count(); ++u)
        if (mark[u]) out.push_back(u);
    return out;
}

inline GridImage image_from_rows(const std::vector<std::vector<double>>& rows, int maxval = 9) {
    GridImage img;
    img.height = static_cast<int>(rows.size());
    img.width = static_cast<int>(rows.front().size());
    img.maxval = maxval;
    for (const auto& row : rows) img.values.insert(img.values.end(), row.begin(), row.end());
    return img;
}

// Pit of depth 4 behind a wall of height 5, joined to a taller peak by a low
// ridge. One dimension-0/1 filtering pass leaves a shallow basin behind; the
// alternating filter clears it.
inline GridImage ridge_crater_image() {
    return image_from_rows({{0, 0, 0, 0, 0, 0, 0},
                            {0, 5, 5, 5, 0, 0, 0},
                            {0, 5, 1, 5, 0, 0, 0},
                            {0, 5, 5, 5, 3, 9, 0},
                            {0, 0, 0, 0, 0, 0, 0}});
}

inline GridImage ring3x3_image() {
    return image_from_rows({{1, 1, 1}, {1, 3, 1}, {1, 1, 1}});
}

// Two bigons sharing a vertex plus a pendant edge: parallel edges bound disks
// holding one high vertex each. Realizes PD0 = {[-3,inf),[1,2)} and
// PD1 = {[1,6),[2,9)}.
inline GwfSignal bigon_wheel_gwf() {
    Graph graph(6, {{1, 2}, {1, 2}, {1, 4}, {2, 4}, {1, 3}, {1, 3}, {1, 5}, {3, 5}, {0, 3}});
    std::vector<std::vector<int>> faces{{0, 2, 3}, {1, 2, 3}, {4, 6, 7}, {5, 6, 7}};
    std::vector<std::vector<int>> holes{{0, 1, 4, 5, 8, 8}};
    Embedding embedding(GraphWithFaces(graph, std::move(faces)), std::move(holes));
    Signal signal(graph, {ExtendedValue(-3.0), ExtendedValue(1.0), ExtendedValue(1.0),
                          ExtendedValue(2.0), ExtendedValue(6.0), ExtendedValue(9.0)});
    return GwfSignal{std::move(embedding), std::move(signal)};
}

inline std::vector<std::array<int, 3>> tetrahedron_triangles() {
    return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
}

inline std::vector<std::array<int, 3>> octahedron_triangles() {
    // apex 0, equator 1..4, bottom 5
    return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
            {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
}

}  // namespace testsupport
