#include "topofilt/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "topofilt/errors.hpp"

namespace topofilt {

namespace {

FiltrationMatrix build_matrix(const Signal& signal, const std::vector<std::vector<int>>* faces,
                              const TotalOrder& order) {
    FiltrationMatrix m;
    m.cells = order.cells();
    m.values.reserve(m.cells.size());
    m.columns.resize(m.cells.size());
    for (std::size_t j = 0; j < m.cells.size(); ++j) {
        const Cell c = m.cells[j];
        m.values.push_back(detail::cell_value(signal, faces, c));
        std::vector<int>& col = m.columns[j];
        if (c.kind == CellKind::edge) {
            const auto& [u, v] = signal.graph().edge(c.index);
            col.push_back(static_cast<int>(order.vertex_position(u)));
            col.push_back(static_cast<int>(order.vertex_position(v)));
        } else if (c.kind == CellKind::face) {
            // Repeated edges cancel over F2: keep odd multiplicities only.
            std::vector<int> es = (*faces)[c.index];
            std::sort(es.begin(), es.end());
            for (std::size_t i = 0; i < es.size();) {
                std::size_t k = i;
                while (k < es.size() && es[k] == es[i]) ++k;
                if ((k - i) % 2 == 1)
                    col.push_back(static_cast<int>(order.position(edge_cell(es[i]))));
                i = k;
            }
        }
        std::sort(col.begin(), col.end());
        for (int row : col) {
            if (row >= static_cast<int>(j))
                throw ValidationError("filtration matrix: boundary entry after its cell");
        }
    }
    return m;
}

std::vector<int> column_add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) out.push_back(a[i++]);
        else if (b[j] < a[i]) out.push_back(b[j++]);
        else { ++i; ++j; }  // equal entries cancel over F2
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

std::pair<Diagram, Diagram> reduce(const FiltrationMatrix& m) {
    const std::size_t n = m.cells.size();
    std::vector<std::vector<int>> cols = m.columns;
    std::vector<int> owner_of_low(n, -1);
    std::vector<char> killed(n, 0);

    Diagram d0, d1;
    auto emit = [&](std::size_t birth_cell, ExtendedValue death) {
        const Cell c = m.cells[birth_cell];
        const int dim = c.kind == CellKind::vertex ? 0 : 1;
        Interval iv(m.values[birth_cell], death, dim);
        (dim == 0 ? d0 : d1).intervals.push_back(iv);
    };

    for (std::size_t j = 0; j < n; ++j) {
        std::vector<int>& col = cols[j];
        while (!col.empty() && owner_of_low[static_cast<std::size_t>(col.back())] != -1)
            col = column_add(col, cols[static_cast<std::size_t>(
                                      owner_of_low[static_cast<std::size_t>(col.back())])]);
        if (!col.empty()) {
            const std::size_t low = static_cast<std::size_t>(col.back());
            owner_of_low[low] = static_cast<int>(j);
            killed[low] = 1;
            emit(low, m.values[j]);
        }
    }
    // Unpaired creators are permanent; 2-dimensional classes are not reported.
    for (std::size_t j = 0; j < n; ++j) {
        if (!cols[j].empty() || killed[j]) continue;
        if (m.cells[j].kind == CellKind::face) continue;
        emit(j, ExtendedValue::infinity());
    }
    return {std::move(d0), std::move(d1)};
}

}  // namespace

FiltrationMatrix filtration_matrix(const Signal& signal, const TotalOrder& order) {
    return build_matrix(signal, nullptr, order);
}

FiltrationMatrix filtration_matrix(const GraphWithFaces& gwf, const Signal& signal,
                                   const TotalOrder& order) {
    return build_matrix(signal, &gwf.faces(), order);
}

Diagram oracle_pd0(const Signal& signal, const TotalOrder& order) {
    struct Component {
        std::size_t min_pos;
        std::vector<int> vertices;
    };
    const int n = signal.vertex_count();
    std::vector<int> comp_of(n, -1);
    std::vector<Component> comps;
    Diagram d;

    for (const Cell c : order.cells()) {
        if (c.kind == CellKind::vertex) {
            comp_of[c.index] = static_cast<int>(comps.size());
            comps.push_back({order.vertex_position(c.index), {c.index}});
        } else if (c.kind == CellKind::edge) {
            const auto& [u, v] = signal.graph().edge(c.index);
            int cu = comp_of[u], cv = comp_of[v];
            if (cu == cv) continue;
            // The component whose order-minimal vertex is larger dies.
            if (comps[cu].min_pos > comps[cv].min_pos) std::swap(cu, cv);
            const int min_vertex =
                static_cast<int>(order.at(comps[cv].min_pos).index);
            d.intervals.emplace_back(signal.value(min_vertex), edge_value(signal, c.index), 0);
            for (int w : comps[cv].vertices) {
                comp_of[w] = cu;
                comps[cu].vertices.push_back(w);
            }
            comps[cv].vertices.clear();
        }
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].vertices.empty()) continue;
        const int min_vertex = static_cast<int>(order.at(comps[i].min_pos).index);
        d.intervals.emplace_back(signal.value(min_vertex), ExtendedValue::infinity(), 0);
    }
    return d;
}

std::pair<Diagram, Diagram> oracle_pd(const GraphWithFaces& gwf, const Signal& signal,
                                      const TotalOrder& order) {
    return reduce(filtration_matrix(gwf, signal, order));
}

std::pair<Diagram, Diagram> oracle_pd(const Signal& signal, const TotalOrder& order) {
    return reduce(filtration_matrix(signal, order));
}

}  // namespace topofilt
