#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid run configuration (bad walk/initial-state combination, bad ancilla
// amplitudes, negative step count, ...). The CLI maps this to exit code 2.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// State norm fell below 1e-300; the state has been projected out completely.
struct ZeroNormError : Error {
    explicit ZeroNormError(const std::string& what) : Error(what) {}
};

// A step operator was asked to act on a state whose support touches the
// lattice boundary. Lattices are sized so this indicates a configuration bug.
struct BoundaryOverflowError : Error {
    explicit BoundaryOverflowError(const std::string& what) : Error(what) {}
};

// A measurement routine was handed a state whose norm deviates from 1.
struct NotNormalizedError : Error {
    explicit NotNormalizedError(const std::string& what) : Error(what) {}
};

// Dense reference operator would be too large to materialize.
struct DimensionTooLargeError : Error {
    explicit DimensionTooLargeError(const std::string& what) : Error(what) {}
};

// Path enumeration was asked for more steps than it can enumerate exactly.
struct TooManyStepsError : Error {
    explicit TooManyStepsError(const std::string& what) : Error(what) {}
};

}  // namespace qwalk
