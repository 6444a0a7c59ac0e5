#pragma once

#include <utility>
#include <vector>

#include "topofilt/diagram.hpp"
#include "topofilt/ordering.hpp"

namespace topofilt {

// A graph together with a set of faces, each given as a multiset of edge
// indices summing to a 1-cycle over F2 (every vertex meets an even number of
// edge occurrences, counting multiplicity). Faces may repeat edges.
class GraphWithFaces {
public:
    GraphWithFaces(Graph graph, std::vector<std::vector<int>> faces);

    const Graph& graph() const { return graph_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    // Sorted, deduplicated vertex set incident to the face's edges.
    std::vector<int> face_vertices(int f) const;

    friend bool operator==(const GraphWithFaces&, const GraphWithFaces&) = default;

private:
    Graph graph_;
    std::vector<std::vector<int>> faces_;
};

// A planar embedding described combinatorially: the complementary regions not
// designated as faces, each as a boundary edge multiset with the same 1-cycle
// condition. Sphere Euler consistency |V| - |E| + |F| + |H| = 2 is enforced;
// the edgeless single-vertex graph is accepted with no faces and no holes
// (its one region has an empty boundary and cannot carry a node).
class Embedding {
public:
    Embedding(GraphWithFaces host, std::vector<std::vector<int>> holes);

    const GraphWithFaces& host() const { return host_; }
    const std::vector<std::vector<int>>& holes() const { return holes_; }
    int hole_count() const { return static_cast<int>(holes_.size()); }
    std::vector<int> hole_vertices(int h) const;

    friend bool operator==(const Embedding&, const Embedding&) = default;

private:
    GraphWithFaces host_;
    std::vector<std::vector<int>> holes_;
};

enum class InducedNodeKind : unsigned char { vertex, face, hole };

struct InducedNode {
    InducedNodeKind kind;
    int index;

    friend bool operator==(const InducedNode&, const InducedNode&) = default;
};

// The graph whose nodes are V + F + H, with one node per face/hole connected
// to every vertex incident to one of its edges; carries f on V, the face
// maximum on F, and +inf on holes. Node numbering: original vertices first,
// then faces in list order, then holes.
struct InducedGraphSignal {
    Signal signal;
    std::vector<InducedNode> nodes;
    int base_vertex_count;
};

InducedGraphSignal build_induced(const Embedding& embedding, const Signal& signal);

// Persistence diagram of the signal over the embedded graph-with-faces.
// dim 0 is the diagram of the induced graph signal; dim 1 negates the induced
// signal, takes its dimension-0 diagram, removes the one permanent interval
// with the smallest birth, and maps [a,b) to [-b,-a).
Diagram pd_gwf(const Embedding& embedding, const Signal& signal, int dim);
std::pair<Diagram, Diagram> pd_gwf_both(const Embedding& embedding, const Signal& signal);

// Low-persistence filter in dimension 0 or 1: apply lpf0 to the (negated)
// induced signal and restrict to the original vertices.
Signal lpf_gwf(const Embedding& embedding, const Signal& signal, double eps, int dim);

struct LpfStarResult {
    Signal filtered;
    int applications;  // single-filter applications performed, no-ops included
    int rounds;
};

// Alternates dimension-0 and dimension-1 filtering, starting with dimension
// 0, until a full round leaves the signal exactly unchanged. Terminates
// within (nontrivial PD0 count) + (nontrivial PD1 count) + 1 rounds; throws
// std::logic_error if that bound is exceeded.
LpfStarResult lpf_star(const Embedding& embedding, const Signal& signal, double eps);

// Cell ordering over V + E + F by (value, dimension, index).
TotalOrder canonical_ordering(const GraphWithFaces& gwf, const Signal& signal);
TotalOrder g_ordering_from_sequence(const GraphWithFaces& gwf, const Signal& signal,
                                    std::vector<Cell> seq);

}  // namespace topofilt
