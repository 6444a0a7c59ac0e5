#include "topofilt/graph.hpp"

#include <numeric>
#include <string>

#include "topofilt/errors.hpp"

namespace topofilt {

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ <= 0) throw ValidationError("graph: vertex count must be positive");
    for (const auto& [u, v] : edges_) {
        if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
            throw ValidationError("graph: edge endpoint out of range");
        if (u == v) throw ValidationError("graph: self-loops are not allowed");
    }
    std::vector<int> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), 0);
    int components = vertex_count_;
    for (const auto& [u, v] : edges_) {
        int ru = uf_find(parent, u), rv = uf_find(parent, v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    if (components != 1)
        throw ValidationError("graph: must be connected (" + std::to_string(components) +
                              " components)");
}

std::vector<int> connected_components(const Subgraph& sub) {
    std::vector<int> parent(sub.host_vertex_count, -1);
    for (int v : sub.vertices) parent[v] = v;
    for (const auto& [u, v] : sub.edges) {
        int ru = uf_find(parent, u), rv = uf_find(parent, v);
        if (ru != rv) parent[ru < rv ? rv : ru] = ru < rv ? ru : rv;
    }
    std::vector<int> label(sub.host_vertex_count, -1);
    // Two passes so every label is the smallest index of its component.
    for (int v : sub.vertices) {
        int r = uf_find(parent, v);
        if (label[r] == -1 || v < label[r]) label[r] = v;
    }
    std::vector<int> out(sub.host_vertex_count, -1);
    for (int v : sub.vertices) out[v] = label[uf_find(parent, v)];
    return out;
}

}  // namespace topofilt
