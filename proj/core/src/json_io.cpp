#include "topofilt/json_io.hpp"

#include <json.hpp>

#include "topofilt/errors.hpp"

namespace topofilt {

namespace {

using nlohmann::json;

json value_to_json(const ExtendedValue& v) {
    if (v.is_pos_infinity()) return "inf";
    if (v.is_neg_infinity()) return "-inf";
    return v.value();
}

ExtendedValue value_from_json(const json& j, const char* what) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return ExtendedValue::infinity();
        if (s == "-inf") return ExtendedValue::neg_infinity();
        throw ParseError(std::string(what) + ": bad value string '" + s + "'");
    }
    if (j.is_number()) return ExtendedValue(j.get<double>());
    throw ParseError(std::string(what) + ": expected a number or 'inf'/'-inf'");
}

std::vector<std::vector<int>> cycles_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected a list of edge lists");
    std::vector<std::vector<int>> out;
    out.reserve(j.size());
    for (const json& cyc : j) {
        if (!cyc.is_array()) throw ParseError(std::string(what) + ": expected an edge list");
        std::vector<int> edge_ids;
        edge_ids.reserve(cyc.size());
        for (const json& e : cyc) {
            if (!e.is_number_integer()) throw ParseError(std::string(what) + ": bad edge index");
            edge_ids.push_back(e.get<int>());
        }
        out.push_back(std::move(edge_ids));
    }
    return out;
}

json json_parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("json: malformed document");
    return j;
}

}  // namespace

ParsedSignal parse_signal_json(const std::string& text) {
    const json j = json_parse(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("signal json: 'vertices' and 'edges' are required");

    const json& jv = j.at("vertices");
    if (!jv.is_array() || jv.empty()) throw ParseError("signal json: 'vertices' must be a non-empty list");
    std::vector<ExtendedValue> values;
    values.reserve(jv.size());
    for (const json& v : jv) values.push_back(value_from_json(v, "signal json vertex"));
    for (const ExtendedValue& v : values) {
        if (v.is_neg_infinity())
            throw ValidationError("signal json: -inf is not permitted on input signals");
    }

    const json& je = j.at("edges");
    if (!je.is_array()) throw ParseError("signal json: 'edges' must be a list");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(je.size());
    for (const json& e : je) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("signal json: each edge must be an [u,v] pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    Graph graph(static_cast<int>(values.size()), std::move(edges));
    Signal signal(graph, std::move(values));

    std::optional<Embedding> embedding;
    if (j.contains("faces") || j.contains("holes")) {
        std::vector<std::vector<int>> faces, holes;
        if (j.contains("faces")) faces = cycles_from_json(j.at("faces"), "signal json faces");
        if (j.contains("holes")) holes = cycles_from_json(j.at("holes"), "signal json holes");
        embedding.emplace(GraphWithFaces(graph, std::move(faces)), std::move(holes));
    }
    return ParsedSignal{std::move(signal), std::move(embedding)};
}

namespace {

json signal_json_object(const Signal& signal) {
    json j = json::object();
    json jv = json::array();
    for (const ExtendedValue& v : signal.values()) jv.push_back(value_to_json(v));
    j["vertices"] = std::move(jv);
    json je = json::array();
    for (const auto& [u, v] : signal.graph().edges()) je.push_back(json::array({u, v}));
    j["edges"] = std::move(je);
    return j;
}

}  // namespace

std::string signal_to_json(const Signal& signal) {
    return signal_json_object(signal).dump(2) + "\n";
}

std::string signal_to_json(const Embedding& embedding, const Signal& signal) {
    json j = signal_json_object(signal);
    json jf = json::array();
    for (const auto& face : embedding.host().faces()) jf.push_back(face);
    j["faces"] = std::move(jf);
    json jh = json::array();
    for (const auto& hole : embedding.holes()) jh.push_back(hole);
    j["holes"] = std::move(jh);
    return j.dump(2) + "\n";
}

std::string diagrams_to_json(const Diagram& d0, const Diagram* d1) {
    Diagram merged = nontrivial(d0);
    if (d1) {
        const Diagram n1 = nontrivial(*d1);
        merged.intervals.insert(merged.intervals.end(), n1.intervals.begin(), n1.intervals.end());
    }
    merged = canonicalized(std::move(merged));
    json out = json::array();
    for (const Interval& iv : merged.intervals) {
        json rec = json::object();
        rec["birth"] = value_to_json(iv.birth());
        rec["death"] = value_to_json(iv.death());
        rec["dim"] = iv.dim();
        out.push_back(std::move(rec));
    }
    return out.dump(2) + "\n";
}

Diagram parse_diagram_json(const std::string& text) {
    const json j = json_parse(text);
    if (!j.is_array()) throw ParseError("diagram json: expected a list");
    Diagram d;
    d.intervals.reserve(j.size());
    for (const json& rec : j) {
        if (!rec.is_object() || !rec.contains("birth") || !rec.contains("death") ||
            !rec.contains("dim"))
            throw ParseError("diagram json: records need 'birth', 'death', 'dim'");
        const int dim = rec.at("dim").get<int>();
        d.intervals.emplace_back(value_from_json(rec.at("birth"), "diagram birth"),
                                 value_from_json(rec.at("death"), "diagram death"), dim);
    }
    return d;
}

std::string bht_to_json(const Bht& bht) {
    json out = json::array();
    for (int v = 0; v < bht.vertex_count(); ++v) {
        json rec = json::object();
        rec["vertex"] = v;
        rec["parent"] = bht.parent(v);
        rec["linking"] = bht.linking(v) ? json(*bht.linking(v)) : json(nullptr);
        rec["pers"] = value_to_json(bht.pers(v));
        out.push_back(std::move(rec));
    }
    return out.dump(2) + "\n";
}

}  // namespace topofilt
