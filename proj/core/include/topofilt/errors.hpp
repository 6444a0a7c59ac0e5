#pragma once

#include <stdexcept>
#include <string>

namespace topofilt {

// Structural rejection of an input: disconnected graph, failed Euler count,
// broken 1-cycle condition, -inf on an input signal, and the like.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (JSON, PGM, CSV, OFF).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace topofilt
