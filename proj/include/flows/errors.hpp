#pragma once

#include <stdexcept>
#include <string>

namespace flows {

// Expression text that does not conform to the input grammar.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its contract (zero divisor, wrong
// homogeneity degree, non-level-1 input, ...).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A classification ran into its configured search bounds and cannot
// answer either way.
struct undecided_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric evaluation failed: continuation hit a singularity, a root
// collision, or step underflow.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace flows
