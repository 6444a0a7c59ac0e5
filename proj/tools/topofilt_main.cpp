// Command-line front end: persistence diagrams, low-persistence filters, BHT
// dumps and SVG diagram plots for signals over graphs and planar
// graphs-with-faces.
//
// Exit codes: 0 success, 1 malformed input, 2 validation failure
// (connectivity / Euler / 1-cycle / unsupported dimension for the input),
// 3 oracle mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "topofilt/adapters.hpp"
#include "topofilt/bht.hpp"
#include "topofilt/errors.hpp"
#include "topofilt/instances.hpp"
#include "topofilt/json_io.hpp"
#include "topofilt/lpf.hpp"
#include "topofilt/oracle.hpp"
#include "topofilt/svg.hpp"

namespace {

using namespace topofilt;

struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class InputFormat { auto_detect, json, pgm, csv, off, generated };

struct LoadedInput {
    Signal signal;
    std::optional<Embedding> embedding;
    InputFormat format = InputFormat::json;
    std::optional<GridImage> image;  // PGM provenance for write-back
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << content;
}

InputFormat detect_format(const std::string& path, const std::string& requested) {
    if (requested == "json") return InputFormat::json;
    if (requested == "pgm") return InputFormat::pgm;
    if (requested == "csv") return InputFormat::csv;
    if (requested == "off") return InputFormat::off;
    if (path.rfind("gen:", 0) == 0) return InputFormat::generated;
    const auto dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "json") return InputFormat::json;
    if (ext == "pgm") return InputFormat::pgm;
    if (ext == "csv" || ext == "txt") return InputFormat::csv;
    if (ext == "off") return InputFormat::off;
    throw ParseError("cannot detect format of '" + path + "'; pass --format");
}

LoadedInput load_generated(const std::string& spec, unsigned seed) {
    InstanceRng rng(seed);
    if (spec.rfind("gen:graph:", 0) == 0) {
        const int n = std::stoi(spec.substr(10));
        if (n < 1) throw ParseError("gen:graph requires a positive vertex count");
        Signal s = random_int_signal(rng, random_connected_graph(rng, n), 0, 9);
        return LoadedInput{std::move(s), std::nullopt, InputFormat::generated, std::nullopt};
    }
    if (spec.rfind("gen:image:", 0) == 0) {
        const std::string dims = spec.substr(10);
        const auto x = dims.find('x');
        if (x == std::string::npos) throw ParseError("gen:image expects M1xM2");
        const int m1 = std::stoi(dims.substr(0, x));
        const int m2 = std::stoi(dims.substr(x + 1));
        if (m1 < 1 || m2 < 1) throw ParseError("gen:image requires positive dimensions");
        GridImage img = random_int_image(rng, m1, m2, 0, 9);
        GwfSignal gwf = image_to_gwf(img);
        return LoadedInput{std::move(gwf.signal), std::move(gwf.embedding),
                           InputFormat::generated, std::move(img)};
    }
    throw ParseError("unknown generator spec '" + spec + "' (gen:graph:N or gen:image:M1xM2)");
}

LoadedInput load_input(const std::string& path, const std::string& format,
                       const std::string& scalars_path, unsigned seed) {
    const InputFormat fmt = detect_format(path, format);
    switch (fmt) {
        case InputFormat::generated:
            return load_generated(path, seed);
        case InputFormat::json: {
            ParsedSignal parsed = parse_signal_json(read_file(path));
            return LoadedInput{std::move(parsed.signal), std::move(parsed.embedding), fmt,
                               std::nullopt};
        }
        case InputFormat::pgm: {
            std::istringstream in(read_file(path));
            GridImage img = read_pgm(in);
            GwfSignal gwf = image_to_gwf(img);
            return LoadedInput{std::move(gwf.signal), std::move(gwf.embedding), fmt,
                               std::move(img)};
        }
        case InputFormat::csv: {
            std::istringstream in(read_file(path));
            return LoadedInput{series_to_signal(read_series(in)), std::nullopt, fmt,
                               std::nullopt};
        }
        case InputFormat::off: {
            if (scalars_path.empty())
                throw ParseError("off input requires --scalars <file>");
            std::istringstream mesh_in(read_file(path));
            const OffMesh mesh = read_off(mesh_in);
            std::istringstream scal_in(read_file(scalars_path));
            GwfSignal gwf = mesh_to_gwf(static_cast<int>(mesh.positions.size()), mesh.triangles,
                                        read_scalars(scal_in));
            return LoadedInput{std::move(gwf.signal), std::move(gwf.embedding), fmt,
                               std::nullopt};
        }
        case InputFormat::auto_detect:
            break;
    }
    throw std::logic_error("unreachable format");
}

// Diagrams for the requested dimensions; dim: 0, 1 or 2 (= both).
std::pair<Diagram, std::optional<Diagram>> compute_diagrams(const LoadedInput& input, int dim,
                                                            bool cross_check) {
    Diagram d0, d1;
    const bool want0 = dim == 0 || dim == 2;
    const bool want1 = dim == 1 || dim == 2;
    if (want1 && !input.embedding)
        throw ValidationError("dimension-1 persistence requires faces/holes (an embedding)");

    if (input.embedding) {
        if (want0) d0 = pd_gwf(*input.embedding, input.signal, 0);
        if (want1) d1 = pd_gwf(*input.embedding, input.signal, 1);
        if (cross_check) {
            const TotalOrder order =
                canonical_ordering(input.embedding->host(), input.signal);
            const auto [o0, o1] = oracle_pd(input.embedding->host(), input.signal, order);
            if (want0 && !diagram_equiv(d0, o0))
                throw OracleMismatch("dimension-0 diagram disagrees with the oracle");
            if (want1 && !diagram_equiv(d1, o1))
                throw OracleMismatch("dimension-1 diagram disagrees with the oracle");
        }
    } else {
        const TotalOrder order = canonical_ordering(input.signal);
        d0 = pd0_from_bht(build_bht(input.signal, order));
        if (cross_check && !diagram_equiv(d0, oracle_pd0(input.signal, order)))
            throw OracleMismatch("dimension-0 diagram disagrees with the oracle");
    }
    if (want1) return {std::move(d0), std::move(d1)};
    return {std::move(d0), std::nullopt};
}

std::string render_diagram_json(int dim, const Diagram& d0, const std::optional<Diagram>& d1) {
    if (dim == 1) return diagrams_to_json(Diagram{}, &*d1);
    return diagrams_to_json(d0, d1 ? &*d1 : nullptr);
}

int parse_dim(const std::string& s, bool allow_star) {
    if (s == "0") return 0;
    if (s == "1") return 1;
    if (s == "both" && !allow_star) return 2;
    if (s == "star" && allow_star) return 2;
    throw CLI::ValidationError("--dim", "bad dimension '" + s + "'");
}

Signal filtered_signal(const LoadedInput& input, int dim, double eps, bool shift) {
    if (shift && dim != 0)
        throw ValidationError("--shift applies to --dim 0 only");
    if (dim != 0 && !input.embedding)
        throw ValidationError("dimension-1 and alternating filters require faces/holes");

    Signal out = input.signal;
    if (!input.embedding) {
        const TotalOrder order = canonical_ordering(input.signal);
        const Bht bht = build_bht(input.signal, order);
        out = shift ? lpf0_shifted(input.signal, bht, eps)
                    : lpf0(input.signal, bht, eps).filtered;
    } else if (dim == 2) {
        out = lpf_star(*input.embedding, input.signal, eps).filtered;
    } else {
        out = lpf_gwf(*input.embedding, input.signal, eps, dim);
        if (shift) {
            std::vector<ExtendedValue> shifted;
            shifted.reserve(out.values().size());
            for (const ExtendedValue& v : out.values())
                shifted.push_back(v - ExtendedValue(eps / 2.0));
            out = Signal(out.graph(), std::move(shifted));
        }
    }
    return out;
}

std::string serialize_filtered(const LoadedInput& input, const Signal& filtered,
                               bool emit_json) {
    if (input.format == InputFormat::pgm && !emit_json) {
        std::ostringstream out;
        write_pgm(out, image_from_signal(*input.image, filtered));
        return out.str();
    }
    if (input.format == InputFormat::csv && !emit_json) {
        std::ostringstream out;
        std::vector<double> values;
        values.reserve(filtered.values().size());
        for (const ExtendedValue& v : filtered.values()) values.push_back(v.value());
        write_series(out, values);
        return out.str();
    }
    if (input.format == InputFormat::off && !emit_json) {
        std::ostringstream out;
        std::vector<double> values;
        values.reserve(filtered.values().size());
        for (const ExtendedValue& v : filtered.values()) values.push_back(v.value());
        write_series(out, values);
        return out.str();
    }
    if (input.embedding) return signal_to_json(*input.embedding, filtered);
    return signal_to_json(filtered);
}

struct CommonOptions {
    std::string input;
    std::string format = "auto";
    std::string scalars;
    std::string output;
    unsigned seed = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("-i,--input", opts.input,
                    "input file or gen:graph:N / gen:image:M1xM2")
        ->required();
    cmd->add_option("-f,--format", opts.format, "input format")
        ->check(CLI::IsMember({"auto", "json", "pgm", "csv", "off"}));
    cmd->add_option("--scalars", opts.scalars, "scalar field file for OFF meshes");
    cmd->add_option("-o,--output", opts.output, "output file")->required();
    cmd->add_option("--seed", opts.seed, "seed for gen: inputs");
}

int run(int argc, char** argv) {
    CLI::App app{"topological filtering of signals over graphs"};
    app.require_subcommand(1);

    CommonOptions pd_opts, filter_opts, bht_opts, plot_opts;
    std::string pd_dim = "auto", plot_dim = "auto", filter_dim;
    bool pd_oracle = false;
    std::string pd_svg;
    double eps = 0.0;
    bool shift = false, emit_json = false;

    CLI::App* pd = app.add_subcommand("pd", "compute persistence diagrams");
    add_common(pd, pd_opts);
    pd->add_option("--dim", pd_dim, "0, 1 or both (default: both when faces are present)")
        ->check(CLI::IsMember({"auto", "0", "1", "both"}));
    pd->add_flag("--oracle", pd_oracle, "cross-check against the reduction oracle");
    pd->add_option("--svg", pd_svg, "also write an SVG scatter plot");

    CLI::App* filter = app.add_subcommand("filter", "apply a low-persistence filter");
    add_common(filter, filter_opts);
    filter->add_option("--dim", filter_dim, "0, 1 or star")
        ->required()
        ->check(CLI::IsMember({"0", "1", "star"}));
    filter->add_option("--eps", eps, "persistence threshold (> 0)")->required();
    filter->add_flag("--shift", shift, "subtract eps/2 (dim 0 only)");
    filter->add_flag("--emit-json", emit_json, "write signal JSON instead of the input format");

    CLI::App* bht_cmd = app.add_subcommand("bht", "dump the basin hierarchy tree");
    add_common(bht_cmd, bht_opts);

    CLI::App* plot = app.add_subcommand("plot", "render a persistence diagram as SVG");
    add_common(plot, plot_opts);
    plot->add_option("--dim", plot_dim, "0, 1 or both")
        ->check(CLI::IsMember({"auto", "0", "1", "both"}));

    CLI11_PARSE(app, argc, argv);

    if (pd->parsed()) {
        const LoadedInput input =
            load_input(pd_opts.input, pd_opts.format, pd_opts.scalars, pd_opts.seed);
        const int dim =
            pd_dim == "auto" ? (input.embedding ? 2 : 0) : parse_dim(pd_dim, false);
        const auto [d0, d1] = compute_diagrams(input, dim, pd_oracle);
        write_file(pd_opts.output, render_diagram_json(dim, d0, d1));
        if (!pd_svg.empty()) write_file(pd_svg, diagram_svg(d0, d1 ? &*d1 : nullptr));
        return 0;
    }
    if (filter->parsed()) {
        if (!(eps > 0)) throw ValidationError("--eps must be positive");
        const LoadedInput input = load_input(filter_opts.input, filter_opts.format,
                                             filter_opts.scalars, filter_opts.seed);
        const int dim = parse_dim(filter_dim, true);
        const Signal out = filtered_signal(input, dim, eps, shift);
        write_file(filter_opts.output, serialize_filtered(input, out, emit_json));
        return 0;
    }
    if (bht_cmd->parsed()) {
        const LoadedInput input =
            load_input(bht_opts.input, bht_opts.format, bht_opts.scalars, bht_opts.seed);
        const TotalOrder order = canonical_ordering(input.signal);
        write_file(bht_opts.output, bht_to_json(build_bht(input.signal, order)));
        return 0;
    }
    if (plot->parsed()) {
        const LoadedInput input =
            load_input(plot_opts.input, plot_opts.format, plot_opts.scalars, plot_opts.seed);
        const int dim =
            plot_dim == "auto" ? (input.embedding ? 2 : 0) : parse_dim(plot_dim, false);
        const auto [d0, d1] = compute_diagrams(input, dim, false);
        write_file(plot_opts.output, diagram_svg(dim == 1 ? Diagram{} : d0,
                                                 d1 ? &*d1 : nullptr));
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const OracleMismatch& e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
