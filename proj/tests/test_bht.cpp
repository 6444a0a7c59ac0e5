#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace testsupport;

TEST_CASE("bht of the four-vertex path") {
    const Signal s = path_signal({3, 1, 4, 2});
    const Bht bht = build_bht(s, canonical_ordering(s));

    CHECK(bht.root() == 1);
    CHECK(bht.parent(0) == 1);
    CHECK(bht.parent(2) == 1);
    CHECK(bht.parent(3) == 1);
    CHECK(*bht.linking(0) == 0);
    CHECK(*bht.linking(2) == 2);
    CHECK(*bht.linking(3) == 2);
    CHECK_FALSE(bht.linking(1).has_value());

    CHECK(bht.pers(1) == ExtendedValue::infinity());
    CHECK(bht.pers(3) == ExtendedValue(2.0));
    CHECK(bht.pers(0) == ExtendedValue(0.0));
    CHECK(bht.pers(2) == ExtendedValue(0.0));
}

TEST_CASE("constant signal gives a single basin") {
    const Signal star(Graph(4, {{3, 0}, {3, 1}, {3, 2}}),
                      {ExtendedValue(2.0), ExtendedValue(2.0), ExtendedValue(2.0),
                       ExtendedValue(2.0)});
    const Bht bht = build_bht(star, canonical_ordering(star));
    CHECK(bht.root() == 0);
    for (int v = 1; v < 4; ++v) {
        CHECK(bht.parent(v) == 0);
        CHECK(bht.pers(v) == ExtendedValue(0.0));
    }

    const Signal path = path_signal({2, 2, 2});
    const Bht pbht = build_bht(path, canonical_ordering(path));
    CHECK(pbht.root() == 0);
    CHECK(pbht.parent(1) == 0);
    CHECK(pbht.parent(2) == 0);
}

TEST_CASE("two-vertex graph") {
    const Signal s = path_signal({0, 1});
    const Bht bht = build_bht(s, canonical_ordering(s));
    CHECK(bht.parent(1) == 0);
    CHECK(*bht.linking(1) == 1);
    CHECK(bht.pers(1) == ExtendedValue(0.0));
}

TEST_CASE("pd0 from bht on hand-checked instances") {
    const Signal s = path_signal({3, 1, 4, 2});
    const Bht bht = build_bht(s, canonical_ordering(s));
    CHECK(diagram_equiv(pd0_from_bht(bht), diag({iv(1, inf()), iv(2, 4)})));

    // two local minima at 1 plus one at 2, merging at 2 and 3
    const Signal fig = path_signal({1, 2, 1, 3, 2});
    const Bht fig_bht = build_bht(fig, canonical_ordering(fig));
    CHECK(diagram_equiv(pd0_from_bht(fig_bht), diag({iv(1, inf()), iv(1, 2), iv(2, 3)})));

    const Signal constant = path_signal({4, 4, 4});
    const Bht cbht = build_bht(constant, canonical_ordering(constant));
    CHECK(diagram_equiv(pd0_from_bht(cbht), diag({iv(4, inf())})));
    CHECK(pd0_from_bht(cbht).intervals.size() == 3);  // one interval per vertex
}

TEST_CASE("ancestors below a persistence bound") {
    const Signal s = path_signal({3, 1, 4, 2});
    const Bht bht = build_bht(s, canonical_ordering(s));
    CHECK(ancestors_below(bht, 3, 3.0) == std::vector<int>{3});
    CHECK(ancestors_below(bht, 1, 100.0).empty());  // root persistence is infinite
    // at eps just above zero only trivial vertices qualify
    CHECK(ancestors_below(bht, 0, 1e-9) == std::vector<int>{0});
    CHECK(ancestors_below(bht, 3, 1e-9).empty());
}

TEST_CASE("bht diagrams match the sweep oracle on random graphs") {
    InstanceRng rng(101);
    for (int i = 0; i < 250; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 12)),
                                           0, 9);
        const TotalOrder order = canonical_ordering(s);
        CHECK(diagram_equiv(pd0_from_bht(build_bht(s, order)), oracle_pd0(s, order)));
    }
}

TEST_CASE("the defining equations hold for every non-root vertex") {
    InstanceRng rng(57);
    for (int i = 0; i < 40; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 9)),
                                           0, 5);
        const TotalOrder order = canonical_ordering(s);
        const Bht bht = build_bht(s, order);
        for (int v = 0; v < s.vertex_count(); ++v) {
            if (v == bht.root()) continue;
            bool found = false;
            for (int e = 0; e < s.graph().edge_count() && !found; ++e) {
                const auto strict = component_minima(sublevel_strict(s, order, edge_cell(e)), order);
                const auto closed = component_minima(sublevel_closed(s, order, edge_cell(e)), order);
                const auto ls = connected_components(sublevel_strict(s, order, edge_cell(e)));
                const auto lc = connected_components(sublevel_closed(s, order, edge_cell(e)));
                if (ls[v] == -1 || lc[v] == -1) continue;
                found = strict.at(ls[v]) == v && closed.at(lc[v]) == bht.parent(v);
            }
            CHECK(found);
        }
    }
}

TEST_CASE("persistence is monotone up the tree and linking vertices are trivial") {
    InstanceRng rng(71);
    for (int i = 0; i < 120; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 12)),
                                           0, 9);
        const Bht bht = build_bht(s, canonical_ordering(s));
        for (int v = 0; v < s.vertex_count(); ++v) {
            if (v == bht.root()) continue;
            const int p = bht.parent(v);
            // parents precede children in the host ordering
            CHECK(bht.order().vertex_position(p) < bht.order().vertex_position(v));
            if (p != bht.root()) {
                CHECK(bht.pers(v) <= bht.pers(p));
                CHECK(s.value(*bht.linking(v)) <= s.value(*bht.linking(p)));
            }
            // the linking vertex merges at its own level: a trivial vertex
            const int w = *bht.linking(v);
            CHECK(w != bht.root());
            CHECK(bht.pers(w) == ExtendedValue(0.0));
        }
    }
}

TEST_CASE("descendants stay below the basin ceiling and reach the linking vertex") {
    InstanceRng rng(83);
    for (int i = 0; i < 60; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 10)),
                                           0, 9);
        const Bht bht = build_bht(s, canonical_ordering(s));
        for (int v = 0; v < s.vertex_count(); ++v) {
            const ExtendedValue ceiling =
                bht.linking(v) ? s.value(*bht.linking(v)) : ExtendedValue::infinity();
            for (int u : descendants(bht, v)) CHECK(s.value(u) <= ceiling);

            if (v == bht.root()) continue;
            // a path from v to its linking vertex with values inside
            // [f(v), f(L(v))]
            const ExtendedValue lo = s.value(v);
            const int target = *bht.linking(v);
            std::set<int> reached{v};
            std::vector<int> frontier{v};
            while (!frontier.empty()) {
                const int x = frontier.back();
                frontier.pop_back();
                for (int e = 0; e < s.graph().edge_count(); ++e) {
                    const auto& [a, b] = s.graph().edge(e);
                    if (a != x && b != x) continue;
                    const int y = a == x ? b : a;
                    if (reached.count(y)) continue;
                    if (s.value(y) < lo || s.value(y) > ceiling) continue;
                    reached.insert(y);
                    frontier.push_back(y);
                }
            }
            CHECK(reached.count(target) == 1);
        }
    }
}

TEST_CASE("relabeling vertices relabels the tree") {
    InstanceRng rng(91);
    for (int i = 0; i < 60; ++i) {
        const int n = rng.int_in(2, 10);
        const Signal s = random_int_signal(rng, random_connected_graph(rng, n), 0, 9);
        const TotalOrder order = canonical_ordering(s);
        const Bht bht = build_bht(s, order);

        // random permutation
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) perm[v] = v;
        for (int v = n - 1; v > 0; --v)
            std::swap(perm[v], perm[rng.below(static_cast<std::uint32_t>(v + 1))]);

        std::vector<std::pair<int, int>> edges;
        for (const auto& [u, v] : s.graph().edges()) edges.emplace_back(perm[u], perm[v]);
        std::vector<ExtendedValue> values(static_cast<std::size_t>(n), ExtendedValue(0.0));
        for (int v = 0; v < n; ++v) values[perm[v]] = s.value(v);
        const Signal relabeled(Graph(n, std::move(edges)), std::move(values));

        // carry the tie-break over: permute the original sequence itself
        std::vector<Cell> seq;
        for (const Cell c : order.cells())
            seq.push_back(c.kind == CellKind::vertex ? vertex_cell(perm[c.index]) : c);
        const Bht rebuilt = build_bht(relabeled, g_ordering_from_sequence(relabeled, seq));

        CHECK(rebuilt.root() == perm[bht.root()]);
        for (int v = 0; v < n; ++v) {
            CHECK(rebuilt.parent(perm[v]) == perm[bht.parent(v)]);
            if (bht.linking(v)) CHECK(*rebuilt.linking(perm[v]) == perm[*bht.linking(v)]);
        }
    }
}
