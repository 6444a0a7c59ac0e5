#include "topofilt/faces.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "topofilt/bht.hpp"
#include "topofilt/errors.hpp"
#include "topofilt/lpf.hpp"

namespace topofilt {

namespace {

// 1-cycle condition over F2: every vertex meets an even number of edge
// occurrences, counting multiplicity.
void validate_cycle(const Graph& g, const std::vector<int>& edge_ids, const char* what) {
    if (edge_ids.empty())
        throw ValidationError(std::string(what) + ": empty boundary is not allowed");
    std::vector<int> incidence(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e : edge_ids) {
        if (e < 0 || e >= g.edge_count())
            throw ValidationError(std::string(what) + ": edge index out of range");
        const auto& [u, v] = g.edge(e);
        ++incidence[u];
        ++incidence[v];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (incidence[v] % 2 != 0)
            throw ValidationError(std::string(what) + ": boundary is not a 1-cycle");
    }
}

std::vector<int> incident_vertices(const Graph& g, const std::vector<int>& edge_ids) {
    std::vector<int> verts;
    verts.reserve(edge_ids.size() * 2);
    for (int e : edge_ids) {
        const auto& [u, v] = g.edge(e);
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

}  // namespace

GraphWithFaces::GraphWithFaces(Graph graph, std::vector<std::vector<int>> faces)
    : graph_(std::move(graph)), faces_(std::move(faces)) {
    for (const auto& face : faces_) validate_cycle(graph_, face, "face");
}

std::vector<int> GraphWithFaces::face_vertices(int f) const {
    return incident_vertices(graph_, faces_[f]);
}

Embedding::Embedding(GraphWithFaces host, std::vector<std::vector<int>> holes)
    : host_(std::move(host)), holes_(std::move(holes)) {
    const Graph& g = host_.graph();
    for (const auto& hole : holes_) validate_cycle(g, hole, "hole");

    const int euler =
        g.vertex_count() - g.edge_count() + host_.face_count() + static_cast<int>(holes_.size());
    if (g.edge_count() == 0) {
        // Connected and edgeless means a single vertex; its one complementary
        // region has an empty boundary, so it carries no face or hole entry.
        if (host_.face_count() != 0 || !holes_.empty())
            throw ValidationError("embedding: an edgeless graph admits no faces or holes");
        return;
    }
    if (euler != 2)
        throw ValidationError("embedding: Euler count V - E + F + H = " + std::to_string(euler) +
                              ", expected 2");
}

std::vector<int> Embedding::hole_vertices(int h) const {
    return incident_vertices(host_.graph(), holes_[h]);
}

InducedGraphSignal build_induced(const Embedding& embedding, const Signal& signal) {
    const GraphWithFaces& gwf = embedding.host();
    const Graph& g = gwf.graph();
    if (!(g == signal.graph()))
        throw ValidationError("build_induced: signal lives on a different graph");

    const int nv = g.vertex_count();
    const int nf = gwf.face_count();
    const int nh = embedding.hole_count();

    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<ExtendedValue> values = signal.values();
    std::vector<InducedNode> nodes;
    nodes.reserve(static_cast<std::size_t>(nv + nf + nh));
    for (int v = 0; v < nv; ++v) nodes.push_back({InducedNodeKind::vertex, v});

    for (int f = 0; f < nf; ++f) {
        const int node = nv + f;
        ExtendedValue fv = ExtendedValue::neg_infinity();
        for (int v : gwf.face_vertices(f)) {
            edges.emplace_back(v, node);
            fv = std::max(fv, signal.value(v));
        }
        values.push_back(fv);
        nodes.push_back({InducedNodeKind::face, f});
    }
    for (int h = 0; h < nh; ++h) {
        const int node = nv + nf + h;
        for (int v : embedding.hole_vertices(h)) edges.emplace_back(v, node);
        values.push_back(ExtendedValue::infinity());
        nodes.push_back({InducedNodeKind::hole, h});
    }

    Graph induced(nv + nf + nh, std::move(edges));
    return InducedGraphSignal{Signal(std::move(induced), std::move(values)), std::move(nodes), nv};
}

namespace {

Diagram pd0_of(const Signal& s) {
    const TotalOrder order = canonical_ordering(s);
    return pd0_from_bht(build_bht(s, order));
}

// Removes the single permanent interval with the smallest birth, then maps
// each [a,b) to [-b,-a) in dimension 1.
Diagram dualize(Diagram d) {
    int permanent = -1;
    for (std::size_t i = 0; i < d.intervals.size(); ++i) {
        const Interval& iv = d.intervals[i];
        if (!iv.death().is_pos_infinity()) continue;
        if (iv.trivial()) continue;
        if (permanent == -1 || iv.birth() < d.intervals[permanent].birth())
            permanent = static_cast<int>(i);
    }
    if (permanent == -1) throw std::logic_error("dualize: no permanent interval found");

    Diagram out;
    out.intervals.reserve(d.intervals.size() - 1);
    for (std::size_t i = 0; i < d.intervals.size(); ++i) {
        if (static_cast<int>(i) == permanent) continue;
        const Interval& iv = d.intervals[i];
        out.intervals.emplace_back(-iv.death(), -iv.birth(), 1);
    }
    return out;
}

}  // namespace

Diagram pd_gwf(const Embedding& embedding, const Signal& signal, int dim) {
    const InducedGraphSignal induced = build_induced(embedding, signal);
    if (dim == 0) return pd0_of(induced.signal);
    if (dim == 1) return dualize(pd0_of(negate(induced.signal)));
    throw std::invalid_argument("pd_gwf: dim must be 0 or 1");
}

std::pair<Diagram, Diagram> pd_gwf_both(const Embedding& embedding, const Signal& signal) {
    return {pd_gwf(embedding, signal, 0), pd_gwf(embedding, signal, 1)};
}

Signal lpf_gwf(const Embedding& embedding, const Signal& signal, double eps, int dim) {
    if (dim != 0 && dim != 1) throw std::invalid_argument("lpf_gwf: dim must be 0 or 1");
    const InducedGraphSignal induced = build_induced(embedding, signal);
    const Signal work = dim == 0 ? induced.signal : negate(induced.signal);
    const TotalOrder order = canonical_ordering(work);
    const FilterResult res = lpf0(work, build_bht(work, order), eps);

    std::vector<ExtendedValue> restricted;
    restricted.reserve(static_cast<std::size_t>(induced.base_vertex_count));
    for (int v = 0; v < induced.base_vertex_count; ++v) {
        const ExtendedValue x = res.filtered.value(v);
        restricted.push_back(dim == 0 ? x : -x);
    }
    return Signal(signal.graph(), std::move(restricted));
}

LpfStarResult lpf_star(const Embedding& embedding, const Signal& signal, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("lpf_star: eps must be positive");
    const auto [pd0, pd1] = pd_gwf_both(embedding, signal);
    const std::size_t max_rounds = nontrivial_count(pd0) + nontrivial_count(pd1) + 1;

    Signal current = signal;
    int applications = 0;
    for (std::size_t round = 1; round <= max_rounds; ++round) {
        Signal after0 = lpf_gwf(embedding, current, eps, 0);
        ++applications;
        const bool changed0 = !(after0 == current);
        Signal after1 = lpf_gwf(embedding, after0, eps, 1);
        ++applications;
        const bool changed1 = !(after1 == after0);
        current = std::move(after1);
        if (!changed0 && !changed1)
            return LpfStarResult{std::move(current), applications, static_cast<int>(round)};
    }
    // Each changing application strictly shrinks the nontrivial count of its
    // dimension, so running past the bound means a bug, not a bad input.
    throw std::logic_error("lpf_star: iteration bound exceeded");
}

TotalOrder canonical_ordering(const GraphWithFaces& gwf, const Signal& signal) {
    if (!(gwf.graph() == signal.graph()))
        throw ValidationError("canonical_ordering: signal lives on a different graph");
    const std::vector<std::vector<int>>* faces = &gwf.faces();
    const Graph& g = gwf.graph();
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(g.vertex_count() + g.edge_count() + gwf.face_count()));
    for (int v = 0; v < g.vertex_count(); ++v) cells.push_back(vertex_cell(v));
    for (int e = 0; e < g.edge_count(); ++e) cells.push_back(edge_cell(e));
    for (int f = 0; f < gwf.face_count(); ++f) cells.push_back(face_cell(f));
    std::sort(cells.begin(), cells.end(), [&](Cell a, Cell b) {
        const ExtendedValue va = detail::cell_value(signal, faces, a);
        const ExtendedValue vb = detail::cell_value(signal, faces, b);
        if (va != vb) return va < vb;
        return a < b;
    });
    return g_ordering_from_sequence(gwf, signal, std::move(cells));
}

TotalOrder g_ordering_from_sequence(const GraphWithFaces& gwf, const Signal& signal,
                                    std::vector<Cell> seq) {
    detail::validate_g_ordering(signal, &gwf.faces(), seq);
    return TotalOrder(signal.graph(), gwf.face_count(), std::move(seq));
}

}  // namespace topofilt
