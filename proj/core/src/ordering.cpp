#include "topofilt/ordering.hpp"

#include <algorithm>
#include <stdexcept>

#include "topofilt/errors.hpp"

namespace topofilt {

namespace detail {

ExtendedValue cell_value(const Signal& signal, const std::vector<std::vector<int>>* faces, Cell c) {
    switch (c.kind) {
        case CellKind::vertex:
            return signal.value(c.index);
        case CellKind::edge:
            return edge_value(signal, c.index);
        case CellKind::face: {
            ExtendedValue m = ExtendedValue::neg_infinity();
            for (int e : (*faces)[c.index]) m = std::max(m, edge_value(signal, e));
            return m;
        }
    }
    throw std::logic_error("cell_value: bad kind");
}

void validate_g_ordering(const Signal& signal, const std::vector<std::vector<int>>* faces,
                         const std::vector<Cell>& seq) {
    const Graph& g = signal.graph();
    const int nv = g.vertex_count();
    const int ne = g.edge_count();
    const int nf = faces ? static_cast<int>(faces->size()) : 0;
    if (seq.size() != static_cast<std::size_t>(nv + ne + nf))
        throw ValidationError("ordering: sequence is not a permutation of all cells");

    std::vector<int> vpos(nv, -1), epos(ne, -1), fpos(nf, -1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Cell c = seq[i];
        std::vector<int>* pos = nullptr;
        int count = 0;
        switch (c.kind) {
            case CellKind::vertex: pos = &vpos; count = nv; break;
            case CellKind::edge: pos = &epos; count = ne; break;
            case CellKind::face: pos = &fpos; count = nf; break;
        }
        if (c.index < 0 || c.index >= count)
            throw ValidationError("ordering: cell index out of range");
        if ((*pos)[c.index] != -1) throw ValidationError("ordering: repeated cell");
        (*pos)[c.index] = static_cast<int>(i);
    }

    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (cell_value(signal, faces, seq[i]) > cell_value(signal, faces, seq[i + 1]))
            throw ValidationError("ordering: values must be non-decreasing");
    }
    for (int e = 0; e < ne; ++e) {
        const auto& [u, v] = g.edge(e);
        if (epos[e] < vpos[u] || epos[e] < vpos[v])
            throw ValidationError("ordering: vertex must precede its incident edges");
    }
    for (int f = 0; f < nf; ++f) {
        for (int e : (*faces)[f]) {
            if (fpos[f] < epos[e])
                throw ValidationError("ordering: edge must precede faces containing it");
        }
    }
}

}  // namespace detail

TotalOrder::TotalOrder(Graph graph, int face_count, std::vector<Cell> seq)
    : graph_(std::move(graph)), face_count_(face_count), seq_(std::move(seq)) {
    index_positions();
}

void TotalOrder::index_positions() {
    vpos_.assign(graph_.vertex_count(), -1);
    epos_.assign(graph_.edge_count(), -1);
    fpos_.assign(face_count_, -1);
    for (std::size_t i = 0; i < seq_.size(); ++i) {
        const Cell c = seq_[i];
        switch (c.kind) {
            case CellKind::vertex: vpos_[c.index] = static_cast<int>(i); break;
            case CellKind::edge: epos_[c.index] = static_cast<int>(i); break;
            case CellKind::face: fpos_[c.index] = static_cast<int>(i); break;
        }
    }
}

std::size_t TotalOrder::position(Cell c) const {
    switch (c.kind) {
        case CellKind::vertex: return static_cast<std::size_t>(vpos_[c.index]);
        case CellKind::edge: return static_cast<std::size_t>(epos_[c.index]);
        case CellKind::face: return static_cast<std::size_t>(fpos_[c.index]);
    }
    throw std::logic_error("position: bad kind");
}

namespace {

std::vector<Cell> sorted_cells(const Signal& signal, const std::vector<std::vector<int>>* faces) {
    const Graph& g = signal.graph();
    std::vector<Cell> cells;
    const int nf = faces ? static_cast<int>(faces->size()) : 0;
    cells.reserve(static_cast<std::size_t>(g.vertex_count() + g.edge_count() + nf));
    for (int v = 0; v < g.vertex_count(); ++v) cells.push_back(vertex_cell(v));
    for (int e = 0; e < g.edge_count(); ++e) cells.push_back(edge_cell(e));
    for (int f = 0; f < nf; ++f) cells.push_back(face_cell(f));
    std::sort(cells.begin(), cells.end(), [&](Cell a, Cell b) {
        const ExtendedValue va = detail::cell_value(signal, faces, a);
        const ExtendedValue vb = detail::cell_value(signal, faces, b);
        if (va != vb) return va < vb;
        return a < b;  // (kind, index) tie-break
    });
    return cells;
}

}  // namespace

TotalOrder canonical_ordering(const Signal& signal) {
    return TotalOrder(signal.graph(), 0, sorted_cells(signal, nullptr));
}

TotalOrder g_ordering_from_sequence(const Signal& signal, std::vector<Cell> seq) {
    detail::validate_g_ordering(signal, nullptr, seq);
    return TotalOrder(signal.graph(), 0, std::move(seq));
}

TotalOrder induced_ordering(const TotalOrder& base, const Signal& new_signal) {
    if (base.face_count() != 0)
        throw std::invalid_argument("induced_ordering: base carries face cells");
    if (!(base.graph() == new_signal.graph()))
        throw ValidationError("induced_ordering: new signal lives on a different graph");
    std::vector<Cell> seq = base.cells();
    std::stable_sort(seq.begin(), seq.end(), [&](Cell a, Cell b) {
        return detail::cell_value(new_signal, nullptr, a) <
               detail::cell_value(new_signal, nullptr, b);
    });
    return TotalOrder(new_signal.graph(), 0, std::move(seq));
}

Subgraph sublevel_prefix(const Signal& signal, const TotalOrder& order, std::size_t count) {
    if (count > order.size()) count = order.size();
    Subgraph sub;
    sub.host_vertex_count = signal.graph().vertex_count();
    for (std::size_t i = 0; i < count; ++i) {
        const Cell c = order.at(i);
        if (c.kind == CellKind::vertex) {
            sub.vertices.push_back(c.index);
        } else if (c.kind == CellKind::edge) {
            sub.edge_ids.push_back(c.index);
            sub.edges.push_back(signal.graph().edge(c.index));
        }
    }
    return sub;
}

Subgraph sublevel_strict(const Signal& signal, const TotalOrder& order, Cell c) {
    return sublevel_prefix(signal, order, order.position(c));
}

Subgraph sublevel_closed(const Signal& signal, const TotalOrder& order, Cell c) {
    return sublevel_prefix(signal, order, order.position(c) + 1);
}

Subgraph sublevel_value(const Signal& signal, const TotalOrder& order, ExtendedValue t) {
    if (order.face_count() != 0)
        throw std::invalid_argument("sublevel_value: order carries face cells");
    std::size_t count = 0;
    while (count < order.size() &&
           detail::cell_value(signal, nullptr, order.at(count)) <= t)
        ++count;
    return sublevel_prefix(signal, order, count);
}

}  // namespace topofilt
