#include "topofilt/instances.hpp"

#include <cmath>

namespace topofilt {

Graph random_connected_graph(InstanceRng& rng, int vertex_count) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < vertex_count; ++v)
        edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint32_t>(v))), v);
    // Extra edges may duplicate, which exercises parallel-edge handling.
    const int extras = vertex_count > 1 ? rng.int_in(0, vertex_count) : 0;
    for (int i = 0; i < extras; ++i) {
        const int u = rng.int_in(0, vertex_count - 1);
        int v = rng.int_in(0, vertex_count - 2);
        if (v >= u) ++v;
        edges.emplace_back(u, v);
    }
    return Graph(vertex_count, std::move(edges));
}

Signal random_int_signal(InstanceRng& rng, Graph graph, int lo, int hi) {
    std::vector<ExtendedValue> values;
    values.reserve(static_cast<std::size_t>(graph.vertex_count()));
    for (int v = 0; v < graph.vertex_count(); ++v)
        values.push_back(static_cast<double>(rng.int_in(lo, hi)));
    return Signal(std::move(graph), std::move(values));
}

GridImage random_int_image(InstanceRng& rng, int height, int width, int lo, int hi) {
    GridImage img;
    img.height = height;
    img.width = width;
    img.maxval = hi;
    img.values.reserve(static_cast<std::size_t>(height) * width);
    for (int i = 0; i < height * width; ++i)
        img.values.push_back(static_cast<double>(rng.int_in(lo, hi)));
    return img;
}

GwfSignal random_fan_gwf(InstanceRng& rng, int n, int lo, int hi) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);  // ring edge i
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n);            // spoke n+i
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i) faces.push_back({i, n + i, n + (i + 1) % n});
    std::vector<int> outer;
    for (int i = 0; i < n; ++i) outer.push_back(i);

    std::vector<ExtendedValue> values;
    for (int v = 0; v <= n; ++v) values.push_back(static_cast<double>(rng.int_in(lo, hi)));
    Graph graph(n + 1, std::move(edges));
    Embedding embedding(GraphWithFaces(graph, std::move(faces)), {std::move(outer)});
    return GwfSignal{std::move(embedding), Signal(std::move(graph), std::move(values))};
}

GridImage gaussian_noise_image(int height, int width, int bumps, double noise_amplitude,
                               std::uint32_t seed) {
    InstanceRng rng(seed);
    GridImage img;
    img.height = height;
    img.width = width;
    img.maxval = 255;
    img.values.assign(static_cast<std::size_t>(height) * width, 0.0);

    struct Bump {
        double r, c, amplitude, sigma;
    };
    std::vector<Bump> centers;
    for (int b = 0; b < bumps; ++b) {
        centers.push_back({rng.unit() * height, rng.unit() * width, 40.0 + 160.0 * rng.unit(),
                           2.0 + 6.0 * rng.unit()});
    }
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            double v = 0.0;
            for (const Bump& b : centers) {
                const double dr = r - b.r, dc = c - b.c;
                v += b.amplitude * std::exp(-(dr * dr + dc * dc) / (2.0 * b.sigma * b.sigma));
            }
            v += noise_amplitude * rng.unit();
            img.values[static_cast<std::size_t>(r) * width + c] = v;
        }
    }
    return img;
}

}  // namespace topofilt
