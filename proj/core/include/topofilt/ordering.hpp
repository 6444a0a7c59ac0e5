#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "topofilt/signal.hpp"

namespace topofilt {

class GraphWithFaces;

enum class CellKind : unsigned char { vertex = 0, edge = 1, face = 2 };

struct Cell {
    CellKind kind;
    int index;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline Cell vertex_cell(int i) { return Cell{CellKind::vertex, i}; }
inline Cell edge_cell(int i) { return Cell{CellKind::edge, i}; }
inline Cell face_cell(int i) { return Cell{CellKind::face, i}; }

// A total order of all cells of its host satisfying the ordering constraints:
// values are non-decreasing along the sequence, every vertex precedes its
// incident edges, and every edge of a face precedes that face.
class TotalOrder {
public:
    const std::vector<Cell>& cells() const { return seq_; }
    std::size_t size() const { return seq_.size(); }
    Cell at(std::size_t i) const { return seq_[i]; }
    std::size_t position(Cell c) const;
    std::size_t vertex_position(int v) const { return static_cast<std::size_t>(vpos_[v]); }
    bool precedes(Cell a, Cell b) const { return position(a) < position(b); }

    const Graph& graph() const { return graph_; }
    int face_count() const { return face_count_; }

    friend bool operator==(const TotalOrder&, const TotalOrder&) = default;

private:
    TotalOrder(Graph graph, int face_count, std::vector<Cell> seq);
    void index_positions();

    friend TotalOrder canonical_ordering(const Signal&);
    friend TotalOrder canonical_ordering(const GraphWithFaces&, const Signal&);
    friend TotalOrder g_ordering_from_sequence(const Signal&, std::vector<Cell>);
    friend TotalOrder g_ordering_from_sequence(const GraphWithFaces&, const Signal&, std::vector<Cell>);
    friend TotalOrder induced_ordering(const TotalOrder&, const Signal&);

    Graph graph_;
    int face_count_;
    std::vector<Cell> seq_;
    std::vector<int> vpos_, epos_, fpos_;
};

// Deterministic ordering: all cells sorted by (value, dimension, index).
// The ordering constraints hold because f(e) >= f(v) for v in V(e) and the
// dimension key breaks equal-value ties in favour of lower-dimensional cells.
TotalOrder canonical_ordering(const Signal& signal);

// Builds an ordering from an explicit cell sequence, validating the
// constraints. Throws ValidationError on any violation.
TotalOrder g_ordering_from_sequence(const Signal& signal, std::vector<Cell> seq);

// The unique ordering for new_signal that keeps the relative order of base
// wherever new values tie: a stable sort of base's sequence by new value.
// Fails if new_signal lives on a different graph.
TotalOrder induced_ordering(const TotalOrder& base, const Signal& new_signal);

// Sublevel sub-structures of the nesting: the first `count` cells of the
// order, the strict/inclusive prefixes of a cell, and the value cut G_t.
Subgraph sublevel_prefix(const Signal& signal, const TotalOrder& order, std::size_t count);
Subgraph sublevel_strict(const Signal& signal, const TotalOrder& order, Cell c);
Subgraph sublevel_closed(const Signal& signal, const TotalOrder& order, Cell c);
Subgraph sublevel_value(const Signal& signal, const TotalOrder& order, ExtendedValue t);

namespace detail {
// Value of a cell under a signal; `faces` supplies face->edge lists and may be
// null for orders without faces.
ExtendedValue cell_value(const Signal& signal, const std::vector<std::vector<int>>* faces, Cell c);
void validate_g_ordering(const Signal& signal, const std::vector<std::vector<int>>* faces,
                         const std::vector<Cell>& seq);
}  // namespace detail

}  // namespace topofilt
