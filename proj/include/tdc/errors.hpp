#pragma once

#include <stdexcept>
#include <string>

namespace tdc {

// Base for all domain errors raised by the library. The CLI maps these to
// exit code 1; anything else (bad usage, malformed input syntax) is code 2.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation precondition does not hold (parameter range, mad bound, ...).
struct precondition_error : error {
    using error::error;
};

// Input exceeds a configured exact-solver guard.
struct too_large_error : error {
    using error::error;
};

// A vertex id outside 0..n-1 was passed.
struct unknown_vertex_error : error {
    using error::error;
};

// A color list is too small for a greedy extension step.
struct list_too_small_error : error {
    using error::error;
};

// Malformed textual input (graph files, rationals, JSON payloads).
struct parse_error : error {
    using error::error;
};

}  // namespace tdc
