#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "topofilt/errors.hpp"
#include "topofilt/lpf.hpp"

using namespace testsupport;

namespace {

Signal lpf0_of(const Signal& s, double eps) {
    return lpf0(s, build_bht(s, canonical_ordering(s)), eps).filtered;
}

Diagram oracle_diagram(const Signal& s) {
    const TotalOrder order = canonical_ordering(s);
    return oracle_pd0(s, order);
}

}  // namespace

TEST_CASE("dimension-0 filter on the four-vertex path") {
    const Signal s = path_signal({3, 1, 4, 2});
    const Bht bht = build_bht(s, canonical_ordering(s));
    const FilterResult res = lpf0(s, bht, 3.0);
    CHECK(res.filtered == path_signal({3, 1, 4, 4}));
    CHECK(diagram_equiv(oracle_diagram(res.filtered), diag({iv(1, inf())})));
    CHECK(res.basins_filled ==
          std::vector<std::pair<int, ExtendedValue>>{{3, ExtendedValue(4.0)}});
}

TEST_CASE("filter below every nonzero persistence is the identity") {
    InstanceRng rng(3);
    for (int i = 0; i < 30; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 10)),
                                           0, 9);
        CHECK(lpf0_of(s, 1e-9) == s);
    }
}

TEST_CASE("filter above every finite persistence leaves one basin") {
    InstanceRng rng(5);
    for (int i = 0; i < 30; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 10)),
                                           0, 9);
        const Signal g = lpf0_of(s, 1e9);
        const ExtendedValue lowest = *std::min_element(s.values().begin(), s.values().end());
        CHECK(diagram_equiv(oracle_diagram(g), diag({iv(lowest, inf())})));
    }
}

TEST_CASE("shifted filter on the path example") {
    const Signal s = path_signal({3, 1, 4, 2});
    const Bht bht = build_bht(s, canonical_ordering(s));
    const Signal shifted = lpf0_shifted(s, bht, 3.0);
    CHECK(shifted == path_signal({1.5, -0.5, 2.5, 2.5}));
    // signed band: -eps/2 <= g - f < eps/2
    for (int v = 0; v < 4; ++v) {
        const double delta = shifted.value(v).value() - s.value(v).value();
        CHECK(delta >= -1.5);
        CHECK(delta < 1.5);
    }
}

TEST_CASE("shifted filter when nothing is filtered is a pure shift") {
    const Signal s = path_signal({0, 5, 1});  // basin persistence 4
    const Bht bht = build_bht(s, canonical_ordering(s));
    CHECK(lpf0_shifted(s, bht, 1.0) == path_signal({-0.5, 4.5, 0.5}));

    const Signal constant = path_signal({2, 2, 2});
    const Bht cbht = build_bht(constant, canonical_ordering(constant));
    CHECK(lpf0_shifted(constant, cbht, 1.0) == path_signal({1.5, 1.5, 1.5}));
}

TEST_CASE("shifted filter rejects infinite values") {
    Signal s(Graph(2, {{0, 1}}), {ExtendedValue(0.0), ExtendedValue::infinity()});
    const Bht bht = build_bht(s, canonical_ordering(s));
    CHECK_THROWS_AS(lpf0_shifted(s, bht, 1.0), ValidationError);
}

TEST_CASE("basin fill on the path example") {
    const Signal s = path_signal({3, 1, 4, 2});
    const Bht bht = build_bht(s, canonical_ordering(s));
    CHECK(basin_fill(s, bht, 3) == path_signal({3, 1, 4, 4}));
    CHECK(basin_fill(s, bht, 0) == s);  // trivial vertex fills to its own value
    CHECK_THROWS_AS(basin_fill(s, bht, 1), std::invalid_argument);  // root
}

TEST_CASE("basin fills over the sub-threshold set commute and compose to the filter") {
    InstanceRng rng(7);
    for (int i = 0; i < 100; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 12)),
                                           0, 9);
        const Bht bht = build_bht(s, canonical_ordering(s));
        const double eps = std::vector<double>{0.5, 1, 2, 5}[rng.below(4)];

        std::vector<int> order_a;
        for (int v = 0; v < s.vertex_count(); ++v)
            if (v != bht.root() && bht.pers(v) < ExtendedValue(eps)) order_a.push_back(v);
        std::vector<int> order_b = order_a;
        for (std::size_t k = order_b.size(); k > 1; --k)
            std::swap(order_b[k - 1], order_b[rng.below(static_cast<std::uint32_t>(k))]);

        Signal a = s;
        for (int v : order_a) a = basin_fill(a, bht, v);
        Signal b = s;
        for (int v : order_b) b = basin_fill(b, bht, v);

        const Signal expected = lpf0(s, bht, eps).filtered;
        CHECK(a == expected);
        CHECK(b == expected);
    }
}

TEST_CASE("filtered diagrams equal the thresholded originals with bounded movement") {
    InstanceRng rng(13);
    for (int i = 0; i < 100; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 12)),
                                           0, 9);
        const Diagram base = oracle_diagram(s);
        for (double eps : {0.5, 1.0, 2.0, 5.0}) {
            const Signal g = lpf0_of(s, eps);
            CHECK(diagram_equiv(oracle_diagram(g),
                                diagram_threshold(base, eps, ThresholdMode::at_least)));
            for (int v = 0; v < s.vertex_count(); ++v) {
                const double delta = g.value(v).value() - s.value(v).value();
                CHECK(delta >= 0.0);
                CHECK(delta < eps);
            }
        }
    }
}

TEST_CASE("the filter is idempotent") {
    InstanceRng rng(17);
    for (int i = 0; i < 60; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 12)),
                                           0, 9);
        const TotalOrder order = canonical_ordering(s);
        const Bht bht = build_bht(s, order);
        const double eps = std::vector<double>{0.5, 1, 2, 5}[rng.below(4)];

        const Signal once = lpf0(s, bht, eps).filtered;
        const Bht bht2 = build_bht(once, induced_ordering(order, once));
        CHECK(lpf0(once, bht2, eps).filtered == once);
    }
}

TEST_CASE("the filter is monotone in the threshold") {
    InstanceRng rng(19);
    for (int i = 0; i < 60; ++i) {
        const Signal s = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 12)),
                                           0, 9);
        const Signal lo = lpf0_of(s, 1.0);
        const Signal hi = lpf0_of(s, 3.0);
        for (int v = 0; v < s.vertex_count(); ++v) CHECK(lo.value(v) <= hi.value(v));
    }
}

TEST_CASE("the tree is stable under its own filter") {
    const Signal s = path_signal({3, 1, 4, 2});
    const Bht bht = build_bht(s, canonical_ordering(s));
    CHECK(check_bht_stability(s, bht, 3.0));
    CHECK(check_bht_stability(s, bht, 1e-9));  // identity filter

    InstanceRng rng(29);
    for (int i = 0; i < 100; ++i) {
        const Signal r = random_int_signal(rng, random_connected_graph(rng, rng.int_in(2, 12)),
                                           0, 9);
        const Bht rbht = build_bht(r, canonical_ordering(r));
        for (double eps : {0.5, 1.0, 2.0, 5.0}) CHECK(check_bht_stability(r, rbht, eps));
    }
}

TEST_CASE("filters reject non-positive thresholds and foreign trees") {
    const Signal s = path_signal({3, 1, 4, 2});
    const Bht bht = build_bht(s, canonical_ordering(s));
    CHECK_THROWS_AS(lpf0(s, bht, 0.0), std::invalid_argument);
    const Signal other = path_signal({1, 2, 3, 4});
    CHECK_THROWS_AS(lpf0(other, bht, 1.0), ValidationError);
}
