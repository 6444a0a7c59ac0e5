#pragma once

#include <optional>
#include <string>

#include "topofilt/bht.hpp"
#include "topofilt/faces.hpp"

namespace topofilt {

// Signal JSON: {"vertices": [...numbers or "inf"/"-inf"...],
//               "edges": [[u,v],...],
//               "faces": [[edge indices],...],   (optional)
//               "holes": [[edge indices],...]}   (optional)
// An embedding is constructed when either optional key is present. Input
// signals may carry +inf but -inf is rejected (reserved for internal duals).
struct ParsedSignal {
    Signal signal;
    std::optional<Embedding> embedding;
};

ParsedSignal parse_signal_json(const std::string& text);

std::string signal_to_json(const Signal& signal);
std::string signal_to_json(const Embedding& embedding, const Signal& signal);

// Diagram JSON: canonical list of {"birth":x,"death":y,"dim":n}, trivial
// intervals dropped, sorted by (dim, birth, death).
std::string diagrams_to_json(const Diagram& d0, const Diagram* d1);
Diagram parse_diagram_json(const std::string& text);

// One record per vertex: {"linking":k|null,"parent":j,"pers":x,"vertex":i}.
std::string bht_to_json(const Bht& bht);

}  // namespace topofilt
