#pragma once

#include <stdexcept>
#include <string>

namespace homcat {

// Malformed data passed across a public interface (bad JSON, wrong vector
// length, unknown name in a relation word, ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency violated (d^2 != 0, entry outside its idempotent
// corner, dimension mismatch between elements of the same algebra, ...).
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation called outside its contract (exchange over a non-symmetric
// algebra, approximation into an empty add(Q), ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Feature deliberately not implemented for the given input
// (radical over a prime field, enumeration above the size bound).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace homcat
