#include "topofilt/adapters.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "topofilt/errors.hpp"

namespace topofilt {

Signal series_to_signal(const std::vector<double>& values) {
    if (values.empty()) throw ValidationError("series: at least one value required");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(values.size() - 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1);
    std::vector<ExtendedValue> vals(values.begin(), values.end());
    return Signal(Graph(static_cast<int>(values.size()), std::move(edges)), std::move(vals));
}

GwfSignal image_to_gwf(const GridImage& img) {
    const int m1 = img.height, m2 = img.width;
    if (m1 < 1 || m2 < 1) throw ValidationError("image: dimensions must be at least 1x1");
    if (static_cast<int>(img.values.size()) != m1 * m2)
        throw ValidationError("image: value count does not match dimensions");

    const auto vid = [m2](int r, int c) { return r * m2 + c; };
    // Horizontal edges first, row-major, then vertical edges.
    const int horizontals = m1 * (m2 - 1);
    const auto hid = [m2](int r, int c) { return r * (m2 - 1) + c; };
    const auto tid = [m2, horizontals](int r, int c) { return horizontals + r * m2 + c; };

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(horizontals + (m1 - 1) * m2));
    for (int r = 0; r < m1; ++r)
        for (int c = 0; c + 1 < m2; ++c) edges.emplace_back(vid(r, c), vid(r, c + 1));
    for (int r = 0; r + 1 < m1; ++r)
        for (int c = 0; c < m2; ++c) edges.emplace_back(vid(r, c), vid(r + 1, c));

    std::vector<std::vector<int>> faces;
    faces.reserve(static_cast<std::size_t>((m1 - 1) * (m2 - 1)));
    for (int r = 0; r + 1 < m1; ++r)
        for (int c = 0; c + 1 < m2; ++c)
            faces.push_back({hid(r, c), tid(r, c), tid(r, c + 1), hid(r + 1, c)});

    std::vector<std::vector<int>> holes;
    if (m1 >= 2 && m2 >= 2) {
        std::vector<int> outer;
        for (int c = 0; c + 1 < m2; ++c) outer.push_back(hid(0, c));
        for (int c = 0; c + 1 < m2; ++c) outer.push_back(hid(m1 - 1, c));
        for (int r = 0; r + 1 < m1; ++r) outer.push_back(tid(r, 0));
        for (int r = 0; r + 1 < m1; ++r) outer.push_back(tid(r, m2 - 1));
        holes.push_back(std::move(outer));
    } else if (m1 * m2 > 1) {
        // A single row or column: the one complementary region walks both
        // sides of the path, so its boundary takes every edge twice.
        std::vector<int> outer;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            outer.push_back(e);
            outer.push_back(e);
        }
        holes.push_back(std::move(outer));
    }

    std::vector<ExtendedValue> vals(img.values.begin(), img.values.end());
    Graph graph(m1 * m2, std::move(edges));
    Embedding embedding(GraphWithFaces(graph, std::move(faces)), std::move(holes));
    return GwfSignal{std::move(embedding), Signal(std::move(graph), std::move(vals))};
}

GwfSignal mesh_to_gwf(int vertex_count, const std::vector<std::array<int, 3>>& triangles,
                      const std::vector<double>& scalars) {
    if (static_cast<int>(scalars.size()) != vertex_count)
        throw ValidationError("mesh: one scalar per vertex required");

    std::map<std::pair<int, int>, int> edge_id;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> faces;
    faces.reserve(triangles.size());
    for (const auto& t : triangles) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw ValidationError("mesh: degenerate triangle");
        std::vector<int> face;
        for (int k = 0; k < 3; ++k) {
            const int a = t[k], b = t[(k + 1) % 3];
            const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            auto it = edge_id.find(key);
            if (it == edge_id.end()) {
                it = edge_id.emplace(key, static_cast<int>(edges.size())).first;
                edges.push_back(key);
            }
            face.push_back(it->second);
        }
        faces.push_back(std::move(face));
    }

    const int euler = vertex_count - static_cast<int>(edges.size()) +
                      static_cast<int>(faces.size());
    if (euler != 2)
        throw ValidationError("mesh: closed-surface Euler characteristic is " +
                              std::to_string(euler) + ", expected 2 (sphere)");

    std::vector<ExtendedValue> vals(scalars.begin(), scalars.end());
    Graph graph(vertex_count, std::move(edges));
    Embedding embedding(GraphWithFaces(graph, std::move(faces)), {});
    return GwfSignal{std::move(embedding), Signal(std::move(graph), std::move(vals))};
}

namespace {

// Pulls the next integer token from a PGM stream, skipping '#' comments.
bool next_pgm_token(std::istream& in, std::string& token) {
    token.clear();
    char ch;
    while (in.get(ch)) {
        if (ch == '#') {
            while (in.get(ch) && ch != '\n') {}
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!token.empty()) return true;
            continue;
        }
        token.push_back(ch);
    }
    return !token.empty();
}

long parse_long(const std::string& token, const char* what) {
    long out = 0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(std::string(what) + ": expected an integer, got '" + token + "'");
    return out;
}

}  // namespace

GridImage read_pgm(std::istream& in) {
    std::string token;
    if (!next_pgm_token(in, token) || token != "P2")
        throw ParseError("pgm: expected magic 'P2'");
    GridImage img;
    if (!next_pgm_token(in, token)) throw ParseError("pgm: missing width");
    img.width = static_cast<int>(parse_long(token, "pgm width"));
    if (!next_pgm_token(in, token)) throw ParseError("pgm: missing height");
    img.height = static_cast<int>(parse_long(token, "pgm height"));
    if (!next_pgm_token(in, token)) throw ParseError("pgm: missing maxval");
    img.maxval = static_cast<int>(parse_long(token, "pgm maxval"));
    if (img.width < 1 || img.height < 1 || img.maxval < 1)
        throw ParseError("pgm: invalid header values");

    img.values.reserve(static_cast<std::size_t>(img.width) * img.height);
    for (long i = 0; i < static_cast<long>(img.width) * img.height; ++i) {
        if (!next_pgm_token(in, token)) throw ParseError("pgm: not enough pixel values");
        const long v = parse_long(token, "pgm pixel");
        if (v < 0 || v > img.maxval) throw ParseError("pgm: pixel out of range");
        img.values.push_back(static_cast<double>(v));
    }
    if (next_pgm_token(in, token)) throw ParseError("pgm: trailing data");
    return img;
}

void write_pgm(std::ostream& out, const GridImage& img) {
    out << "P2\n" << img.width << ' ' << img.height << '\n' << img.maxval << '\n';
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            if (c) out << ' ';
            out << static_cast<long>(img.at(r, c));
        }
        out << '\n';
    }
}

namespace {

long round_half_even(double x) {
    const double floor_x = std::floor(x);
    const double frac = x - floor_x;
    if (frac > 0.5) return static_cast<long>(floor_x) + 1;
    if (frac < 0.5) return static_cast<long>(floor_x);
    const long lo = static_cast<long>(floor_x);
    return lo % 2 == 0 ? lo : lo + 1;
}

}  // namespace

GridImage image_from_signal(const GridImage& original, const Signal& filtered) {
    if (static_cast<int>(filtered.values().size()) != original.height * original.width)
        throw ValidationError("image write-back: size mismatch");
    GridImage out = original;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const ExtendedValue v = filtered.values()[i];
        if (!v.finite()) throw ValidationError("image write-back: non-finite value");
        const long r = std::clamp(round_half_even(v.value()), 0L, static_cast<long>(out.maxval));
        out.values[i] = static_cast<double>(r);
    }
    return out;
}

std::vector<double> read_series(std::istream& in) {
    std::vector<double> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(a, b - a + 1);
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size() || !std::isfinite(v))
                throw ParseError("series: bad value '" + token + "'");
            out.push_back(v);
        } catch (const std::invalid_argument&) {
            throw ParseError("series: bad value '" + token + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("series: value out of range '" + token + "'");
        }
    }
    if (out.empty()) throw ParseError("series: no values");
    return out;
}

void write_series(std::ostream& out, const std::vector<double>& values) {
    for (double v : values) out << format_double(v) << '\n';
}

OffMesh read_off(std::istream& in) {
    std::string token;
    auto next = [&](const char* what) {
        if (!next_pgm_token(in, token)) throw ParseError(std::string("off: missing ") + what);
        return token;
    };
    if (next("magic") != "OFF") throw ParseError("off: expected magic 'OFF'");
    const long nv = parse_long(next("vertex count"), "off vertex count");
    const long nf = parse_long(next("face count"), "off face count");
    parse_long(next("edge count"), "off edge count");  // conventionally unused
    if (nv < 1 || nf < 0) throw ParseError("off: invalid counts");

    OffMesh mesh;
    mesh.positions.reserve(static_cast<std::size_t>(nv));
    for (long i = 0; i < nv; ++i) {
        std::array<double, 3> p{};
        for (int k = 0; k < 3; ++k) {
            try {
                p[k] = std::stod(next("coordinate"));
            } catch (const std::exception&) {
                throw ParseError("off: bad coordinate '" + token + "'");
            }
        }
        mesh.positions.push_back(p);
    }
    mesh.triangles.reserve(static_cast<std::size_t>(nf));
    for (long i = 0; i < nf; ++i) {
        const long arity = parse_long(next("face arity"), "off face arity");
        if (arity != 3) throw ParseError("off: only triangular faces are supported");
        std::array<int, 3> t{};
        for (int k = 0; k < 3; ++k) {
            const long idx = parse_long(next("face index"), "off face index");
            if (idx < 0 || idx >= nv) throw ParseError("off: face index out of range");
            t[k] = static_cast<int>(idx);
        }
        mesh.triangles.push_back(t);
    }
    return mesh;
}

std::vector<double> read_scalars(std::istream& in) { return read_series(in); }

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::logic_error("format_double: buffer too small");
    return std::string(buf, ptr);
}

}  // namespace topofilt
