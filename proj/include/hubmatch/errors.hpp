#pragma once

#include <stdexcept>
#include <string>

namespace hubmatch {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, XML documents).
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed input that violates an invariant
// (self-loops, inconsistent graphlet documents, bad orderings).
struct ValidationError : Error {
    using Error::Error;
};

// A vertex label or index that does not belong to the graph at hand.
struct UnknownVertexError : Error {
    using Error::Error;
};

// Input exceeds a configured exhaustive-search guard.
struct CapacityError : Error {
    using Error::Error;
};

}  // namespace hubmatch
