#pragma once

#include <cstdint>
#include <random>

#include "topofilt/adapters.hpp"

namespace topofilt {

// Seeded generator with arithmetic kept explicit so streams are reproducible
// across platforms and standard-library versions.
class InstanceRng {
public:
    explicit InstanceRng(std::uint32_t seed) : eng_(seed) {}

    std::uint32_t below(std::uint32_t n) { return eng_() % n; }
    int int_in(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint32_t>(hi - lo + 1))); }
    double unit() { return eng_() * (1.0 / 4294967296.0); }

private:
    std::mt19937 eng_;
};

// Random spanning tree plus a random number of extra edges; duplicates give
// parallel edges on purpose.
Graph random_connected_graph(InstanceRng& rng, int vertex_count);
Signal random_int_signal(InstanceRng& rng, Graph graph, int lo, int hi);
GridImage random_int_image(InstanceRng& rng, int height, int width, int lo, int hi);

// Fan triangulation of an n-gon around a hub vertex: n ring edges, n spokes,
// n triangular faces, one outer hole. A planar instance that is not a grid.
GwfSignal random_fan_gwf(InstanceRng& rng, int n, int lo, int hi);

// Sum of Gaussian bumps plus seeded uniform noise.
GridImage gaussian_noise_image(int height, int width, int bumps, double noise_amplitude,
                               std::uint32_t seed);

}  // namespace topofilt
