#include <doctest.h>

#include "support.hpp"
#include "topofilt/errors.hpp"

using namespace testsupport;

TEST_CASE("component sweep on hand-checked instances") {
    const Signal s = path_signal({3, 1, 4, 2});
    const Diagram d = oracle_pd0(s, canonical_ordering(s));
    CHECK(diagram_equiv(d, diag({iv(1, inf()), iv(2, 4)})));
    CHECK(d.intervals.size() == 4);  // one interval per vertex, trivials included

    const Signal dot = path_signal({7});
    CHECK(oracle_pd0(dot, canonical_ordering(dot)).intervals ==
          std::vector<Interval>{iv(7, inf())});

    // star with the centre below the leaves: every leaf merges immediately
    const Signal star(Graph(4, {{0, 1}, {0, 2}, {0, 3}}),
                      {ExtendedValue(0.0), ExtendedValue(1.0), ExtendedValue(1.0),
                       ExtendedValue(1.0)});
    const Diagram ds = oracle_pd0(star, canonical_ordering(star));
    CHECK(nontrivial_count(ds) == 1);
    CHECK(ds.intervals.size() == 4);
}

TEST_CASE("reduction on the ring image complex") {
    const GwfSignal g = image_to_gwf(ring3x3_image());
    const TotalOrder order = canonical_ordering(g.embedding.host(), g.signal);
    const auto [d0, d1] = oracle_pd(g.embedding.host(), g.signal, order);
    CHECK(diagram_equiv(d0, diag({iv(1, inf())})));
    CHECK(diagram_equiv(d1, diag({iv(1, 3, 1)})));
}

TEST_CASE("without faces every cycle class is permanent") {
    InstanceRng rng(41);
    for (int i = 0; i < 40; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 10)),
                                           0, 9);
        const auto [d0, d1] = oracle_pd(s, canonical_ordering(s));
        const int cycles = s.graph().edge_count() - s.vertex_count() + 1;
        CHECK(static_cast<int>(d1.intervals.size()) == cycles);
        for (const Interval& ivl : d1.intervals) CHECK(ivl.death().is_pos_infinity());
        CHECK(diagram_equiv(d0, oracle_pd0(s, canonical_ordering(s))));
    }
}

TEST_CASE("a filled triangle with constant signal has no dimension-1 classes") {
    const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    const GraphWithFaces gwf(triangle, {{0, 1, 2}});
    const Signal s(triangle, {ExtendedValue(2.0), ExtendedValue(2.0), ExtendedValue(2.0)});
    const auto [d0, d1] = oracle_pd(gwf, s, canonical_ordering(gwf, s));
    CHECK(diagram_equiv(d1, Diagram{}));
    CHECK(diagram_equiv(d0, diag({iv(2, inf())})));
}

TEST_CASE("faces with repeated edges cancel over F2") {
    // two vertices, two parallel edges, one face using one edge twice: its
    // boundary column is empty, so the bigon cycle class stays permanent.
    const Graph bigon(2, {{0, 1}, {0, 1}});
    const GraphWithFaces gwf(bigon, {{0, 0}});
    const Signal s(bigon, {ExtendedValue(0.0), ExtendedValue(1.0)});
    const FiltrationMatrix m = filtration_matrix(gwf, s, canonical_ordering(gwf, s));
    CHECK(m.columns.back().empty());
    const auto [d0, d1] = oracle_pd(gwf, s, canonical_ordering(gwf, s));
    CHECK(diagram_equiv(d1, diag({iv(1, inf(), 1)})));
}

TEST_CASE("interval counts are conserved") {
    InstanceRng rng(43);
    for (int i = 0; i < 30; ++i) {
        const GridImage img = random_int_image(rng, rng.int_in(2, 5), rng.int_in(2, 5), 0, 9);
        const GwfSignal g = image_to_gwf(img);
        const GraphWithFaces& gwf = g.embedding.host();
        const TotalOrder order = canonical_ordering(gwf, g.signal);
        const auto [d0, d1] = oracle_pd(gwf, g.signal, order);

        CHECK(static_cast<int>(d0.intervals.size()) == g.signal.vertex_count());

        std::size_t finite = 0, permanent = 0;
        for (const Diagram* d : {&d0, &d1}) {
            for (const Interval& ivl : d->intervals)
                ++(ivl.death().is_pos_infinity() ? permanent : finite);
        }
        const std::size_t cells = static_cast<std::size_t>(
            g.signal.vertex_count() + gwf.graph().edge_count() + gwf.face_count());
        // cells = 2 * pairs + unpaired; unreported unpaired cells are faces
        CHECK(2 * finite + permanent <= cells);
        CHECK((cells - 2 * finite - permanent) <=
              static_cast<std::size_t>(gwf.face_count()));
    }
}

TEST_CASE("the two oracles agree in dimension 0") {
    InstanceRng rng(47);
    for (int i = 0; i < 60; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 11)),
                                           0, 9);
        const TotalOrder order = canonical_ordering(s);
        CHECK(diagram_equiv(oracle_pd0(s, order), oracle_pd(s, order).first));
    }
}
