#pragma once

#include <stdexcept>
#include <string>

namespace howe {

// Bad input: malformed labels, out-of-range ranks, inconsistent tower data.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal self-check failed (oracle disagreement, non-orthonormal table).
// Never caught and ignored inside the library.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace howe
