#pragma once

#include <utility>
#include <vector>

namespace topofilt {

// Finite undirected graph on vertex indices [0, vertex_count). Parallel edges
// are allowed (faces may share boundary edges); self-loops are rejected.
// Instances are non-empty and connected by construction.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
};

// A sub-structure of a host graph; vertices and edges keep their host indices.
struct Subgraph {
    int host_vertex_count = 0;
    std::vector<int> vertices;
    std::vector<int> edge_ids;
    std::vector<std::pair<int, int>> edges;
};

// Component label per host vertex, -1 for vertices absent from the subgraph.
// The label of a component is its smallest member index.
std::vector<int> connected_components(const Subgraph& sub);

}  // namespace topofilt
