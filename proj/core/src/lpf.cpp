#include "topofilt/lpf.hpp"

#include <algorithm>
#include <stdexcept>

#include "topofilt/errors.hpp"

namespace topofilt {

namespace {

void require_same_host(const Signal& signal, const Bht& bht, const char* who) {
    if (!(bht.signal() == signal))
        throw ValidationError(std::string(who) + ": tree was built from a different signal");
}

}  // namespace

FilterResult lpf0(const Signal& signal, const Bht& bht, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("lpf0: eps must be positive");
    require_same_host(signal, bht, "lpf0");

    const ExtendedValue threshold(eps);
    const int n = signal.vertex_count();
    std::vector<ExtendedValue> carry(n, ExtendedValue::neg_infinity());
    std::vector<ExtendedValue> out(signal.values());
    std::vector<std::pair<int, ExtendedValue>> filled;

    // Host order visits parents before children, so the running max over
    // qualifying ancestors is complete when a vertex is reached.
    for (const Cell c : bht.order().cells()) {
        if (c.kind != CellKind::vertex) continue;
        const int v = c.index;
        ExtendedValue contribution = ExtendedValue::neg_infinity();
        const ExtendedValue pers = bht.pers(v);
        if (pers < threshold) {
            contribution = signal.value(*bht.linking(v));
            if (pers > ExtendedValue(0.0)) filled.emplace_back(v, contribution);
        }
        if (v != bht.root())
            carry[v] = std::max(carry[bht.parent(v)], contribution);
        else
            carry[v] = contribution;
        out[v] = std::max(signal.value(v), carry[v]);
    }
    return FilterResult{Signal(signal.graph(), std::move(out)), eps, std::move(filled)};
}

Signal lpf0_shifted(const Signal& signal, const Bht& bht, double eps) {
    if (!signal.all_finite())
        throw ValidationError("lpf0_shifted: shift is undefined for infinite values");
    FilterResult res = lpf0(signal, bht, eps);
    std::vector<ExtendedValue> shifted;
    shifted.reserve(res.filtered.values().size());
    for (const ExtendedValue& v : res.filtered.values())
        shifted.push_back(v - ExtendedValue(eps / 2.0));
    return Signal(signal.graph(), std::move(shifted));
}

Signal basin_fill(const Signal& signal, const Bht& bht, int v) {
    if (signal.vertex_count() != bht.vertex_count())
        throw ValidationError("basin_fill: signal size mismatch");
    if (v == bht.root()) throw std::invalid_argument("basin_fill: cannot fill the root basin");

    const ExtendedValue level = signal.value(*bht.linking(v));
    std::vector<char> in_basin(static_cast<std::size_t>(bht.vertex_count()), 0);
    in_basin[v] = 1;
    std::vector<ExtendedValue> out(signal.values());
    out[v] = level;
    // Parents precede children in host order, so one pass marks the basin.
    for (const Cell c : bht.order().cells()) {
        if (c.kind != CellKind::vertex) continue;
        const int u = c.index;
        if (u == bht.root() || u == v) continue;
        if (in_basin[bht.parent(u)]) {
            in_basin[u] = 1;
            out[u] = level;
        }
    }
    return Signal(signal.graph(), std::move(out));
}

bool check_bht_stability(const Signal& signal, const Bht& bht, double eps) {
    const FilterResult res = lpf0(signal, bht, eps);
    const TotalOrder reordered = induced_ordering(bht.order(), res.filtered);
    const Bht rebuilt = build_bht(res.filtered, reordered);
    return rebuilt.parents() == bht.parents() && rebuilt.linkings() == bht.linkings();
}

}  // namespace topofilt
