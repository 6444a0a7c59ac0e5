#include "topofilt/bht.hpp"

#include <stdexcept>

#include "topofilt/errors.hpp"

namespace topofilt {

namespace {

// Path-compressed find over a scratch forest; the BHT parent map itself is
// never compressed (its edges are the output).
struct Find {
    std::vector<int> parent;
    std::vector<int> comp_min;  // order-minimal vertex of the component at each root

    explicit Find(int n) : parent(n), comp_min(n) {
        for (int i = 0; i < n; ++i) parent[i] = comp_min[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
};

}  // namespace

Bht::Bht(Signal signal, TotalOrder order, std::vector<int> parent,
         std::vector<std::optional<int>> linking, int root)
    : signal_(std::move(signal)),
      order_(std::move(order)),
      parent_(std::move(parent)),
      linking_(std::move(linking)),
      root_(root) {}

ExtendedValue Bht::pers(int v) const {
    if (!linking_[v]) return ExtendedValue::infinity();
    const ExtendedValue fv = signal_.value(v);
    const ExtendedValue fl = signal_.value(*linking_[v]);
    if (fl == fv) return ExtendedValue(0.0);
    return fl - fv;
}

Bht build_bht(const Signal& signal, const TotalOrder& order) {
    if (order.face_count() != 0)
        throw std::invalid_argument("build_bht: order carries face cells");
    if (!(order.graph() == signal.graph()))
        throw ValidationError("build_bht: ordering belongs to a different graph");

    const int n = signal.vertex_count();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::vector<std::optional<int>> linking(n);
    Find uf(n);

    for (const Cell c : order.cells()) {
        if (c.kind != CellKind::edge) continue;
        const auto& [u, v] = signal.graph().edge(c.index);
        const int ru = uf.comp_min[uf.find(u)];
        const int rv = uf.comp_min[uf.find(v)];
        if (ru == rv) continue;  // cycle edge, no merge

        const bool ru_smaller = order.vertex_position(ru) < order.vertex_position(rv);
        const int winner = ru_smaller ? ru : rv;
        const int loser = ru_smaller ? rv : ru;
        parent[loser] = winner;
        linking[loser] =
            order.vertex_position(u) > order.vertex_position(v) ? u : v;  // max V(e) in the order

        uf.parent[uf.find(u)] = uf.find(v);
        uf.comp_min[uf.find(v)] = winner;
    }

    const int root = uf.comp_min[uf.find(0)];
    // Connectivity is a Graph invariant, so the forest must have collapsed.
    for (int v = 0; v < n; ++v) {
        if (v != root && parent[v] == v)
            throw ValidationError("build_bht: graph is not connected");
    }
    return Bht(signal, order, std::move(parent), std::move(linking), root);
}

Diagram pd0_from_bht(const Bht& bht) {
    Diagram d;
    d.intervals.reserve(static_cast<std::size_t>(bht.vertex_count()));
    for (int v = 0; v < bht.vertex_count(); ++v) {
        const ExtendedValue birth = bht.signal().value(v);
        const ExtendedValue death =
            bht.linking(v) ? bht.signal().value(*bht.linking(v)) : ExtendedValue::infinity();
        d.intervals.emplace_back(birth, death, 0);
    }
    return d;
}

std::vector<int> ancestors_below(const Bht& bht, int v, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("ancestors_below: eps must be positive");
    std::vector<int> out;
    int u = v;
    while (true) {
        if (bht.pers(u) < ExtendedValue(eps)) out.push_back(u);
        if (u == bht.root()) break;
        u = bht.parent(u);
    }
    return out;
}

}  // namespace topofilt
