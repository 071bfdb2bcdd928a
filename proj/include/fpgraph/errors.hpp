#pragma once

#include <stdexcept>
#include <string>

namespace fpgraph {

// Thrown when an argument lies outside an operation's mathematical domain
// (cross-space sets, negative gauge argument, epsilon <= 0, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when an input object is malformed before any mathematics happens
// (dimension mismatch, non-total map table, broken piecewise cover, ...).
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when contraction parameters violate their invariants.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace fpgraph
