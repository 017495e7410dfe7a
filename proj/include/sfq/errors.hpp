// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>

namespace sfq {

// Violation of a parameter-domain precondition (bad energies, dimensions, ranges).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed pulse sequence: symbol outside the alphabet, bad length, parse failure.
struct SequenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sfq
