#pragma once

#include <stdexcept>
#include <string>

namespace qamp {

// Operand dimensions (or qubit counts) do not line up.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input state is not a tensor product of single-qubit factors.
class NotSeparable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem-level failure (missing file, unwritable path).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// State document is readable but does not satisfy the format contract.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qamp
