#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "topofilt/faces.hpp"

namespace topofilt {

// Row-major grayscale image; maxval is PGM provenance used on write-back.
struct GridImage {
    int height = 0;  // m1
    int width = 0;   // m2
    std::vector<double> values;
    int maxval = 255;

    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * width + c]; }
};

struct OffMesh {
    std::vector<std::array<double, 3>> positions;
    std::vector<std::array<int, 3>> triangles;
};

// Bundles an embedded graph-with-faces and the signal over it.
struct GwfSignal {
    Embedding embedding;
    Signal signal;
};

// Path graph with consecutive-index edges.
Signal series_to_signal(const std::vector<double>& values);

// 4-neighbour grid graph with one unit-square face per cell of the dual grid
// and a single outer hole. Degenerate rows/columns: a 1xN (Nx1) image has no
// faces and its outer hole traverses every edge twice; a 1x1 image has
// neither faces nor holes.
GwfSignal image_to_gwf(const GridImage& img);

// Triangulated closed surface with sphere Euler characteristic; edges are
// deduplicated triangle sides, every triangle is a face, the hole set is
// empty. Rejects anything with V - E + F != 2.
GwfSignal mesh_to_gwf(int vertex_count, const std::vector<std::array<int, 3>>& triangles,
                      const std::vector<double>& scalars);

// ASCII PGM (P2).
GridImage read_pgm(std::istream& in);
void write_pgm(std::ostream& out, const GridImage& img);

// Writes a filtered signal back into the image grid, rounding half-to-even
// and clamping to [0, maxval].
GridImage image_from_signal(const GridImage& original, const Signal& filtered);

// One value per line.
std::vector<double> read_series(std::istream& in);
void write_series(std::ostream& out, const std::vector<double>& values);

// ASCII OFF with triangular faces; the scalar field comes separately.
OffMesh read_off(std::istream& in);
std::vector<double> read_scalars(std::istream& in);

// Shortest round-trip decimal representation.
std::string format_double(double v);

}  // namespace topofilt
