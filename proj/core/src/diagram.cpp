#include "topofilt/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace topofilt {

Interval::Interval(ExtendedValue birth, ExtendedValue death, int dim)
    : birth_(birth), death_(death), dim_(dim) {
    if (birth_ > death_) throw std::invalid_argument("interval: birth must not exceed death");
    if (dim_ != 0 && dim_ != 1) throw std::invalid_argument("interval: dimension must be 0 or 1");
}

ExtendedValue Interval::persistence() const {
    if (birth_ == death_) return ExtendedValue(0.0);
    return death_ - birth_;  // infinite death or -inf birth yields +inf
}

Diagram canonicalized(Diagram d) {
    std::sort(d.intervals.begin(), d.intervals.end(), [](const Interval& a, const Interval& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        if (a.birth() != b.birth()) return a.birth() < b.birth();
        return a.death() < b.death();
    });
    return d;
}

Diagram nontrivial(const Diagram& d) {
    Diagram out;
    for (const Interval& iv : d.intervals)
        if (!iv.trivial()) out.intervals.push_back(iv);
    return out;
}

std::size_t nontrivial_count(const Diagram& d) {
    std::size_t n = 0;
    for (const Interval& iv : d.intervals)
        if (!iv.trivial()) ++n;
    return n;
}

bool diagram_equiv(const Diagram& a, const Diagram& b) {
    const Diagram ca = canonicalized(nontrivial(a));
    const Diagram cb = canonicalized(nontrivial(b));
    return ca.intervals == cb.intervals;
}

Diagram diagram_threshold(const Diagram& d, double eps, ThresholdMode mode) {
    if (!(eps > 0)) throw std::invalid_argument("diagram_threshold: eps must be positive");
    Diagram out;
    for (const Interval& iv : d.intervals) {
        const bool keep = mode == ThresholdMode::at_least ? iv.persistence() >= ExtendedValue(eps)
                                                          : iv.persistence() < ExtendedValue(eps);
        if (keep) out.intervals.push_back(iv);
    }
    return out;
}

namespace {

// Augmenting-path step of the bipartite matching between nontrivial intervals
// of g (left) and f (right); an edge means the right interval persists at
// least as long as the left one.
bool augment(int left, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
             std::vector<char>& visited) {
    for (int right : adj[left]) {
        if (visited[right]) continue;
        visited[right] = 1;
        if (match_right[right] == -1 || augment(match_right[right], adj, match_right, visited)) {
            match_right[right] = left;
            return true;
        }
    }
    return false;
}

}  // namespace

bool dominates(const Diagram& g, const Diagram& f) {
    std::vector<ExtendedValue> gp, fp;
    for (const Interval& iv : g.intervals)
        if (!iv.trivial()) gp.push_back(iv.persistence());
    for (const Interval& iv : f.intervals)
        if (!iv.trivial()) fp.push_back(iv.persistence());
    if (gp.size() > fp.size()) return false;

    std::vector<std::vector<int>> adj(gp.size());
    for (std::size_t i = 0; i < gp.size(); ++i)
        for (std::size_t j = 0; j < fp.size(); ++j)
            if (fp[j] >= gp[i]) adj[i].push_back(static_cast<int>(j));

    std::vector<int> match_right(fp.size(), -1);
    for (std::size_t i = 0; i < gp.size(); ++i) {
        std::vector<char> visited(fp.size(), 0);
        if (!augment(static_cast<int>(i), adj, match_right, visited)) return false;
    }
    return true;
}

bool dominates(const std::pair<Diagram, Diagram>& g, const std::pair<Diagram, Diagram>& f) {
    return dominates(g.first, f.first) && dominates(g.second, f.second);
}

}  // namespace topofilt
