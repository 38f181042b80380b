#pragma once

#include <stdexcept>
#include <string>

namespace quantlet {

// Error taxonomy mirrored by the CLI exit codes: 2 config, 3 schema,
// 4 convergence, 5 I/O.

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (bad CSV rows, dimension
// mismatches, degenerate samples, single-class labels).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace quantlet
