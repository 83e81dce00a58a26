#pragma once

#include <stdexcept>
#include <string>

namespace vectcoh {

// Malformed input document (bad JSON, missing field, wrong type).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid document violating a cochain invariant
// (homogeneity, relative floor, repeated orders, zero coefficient).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Operation invoked outside its supported arity range.
struct ArityError : std::invalid_argument {
    explicit ArityError(const std::string& what) : std::invalid_argument(what) {}
};

// reduce_mod_coboundaries on a cochain whose coboundary is nonzero.
// Carries the serialized nonzero delta for reporting.
struct NotACocycleError : std::runtime_error {
    explicit NotACocycleError(std::string delta_json)
        : std::runtime_error("input is not a cocycle"), delta(std::move(delta_json)) {}
    std::string delta;
};

}  // namespace vectcoh
