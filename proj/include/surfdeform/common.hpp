#pragma once

#include <stdexcept>
#include <string>

namespace surfdeform {

// Thrown when operator lengths disagree.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad operand for a transformation (unknown operator, index out of range, ...).
struct operand_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coordinate does not name what the operation expects (wrong role, wrong region).
struct geometry_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A transformation precondition failed (not a valid S2G, degenerate gauge, ...).
struct transform_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Internal consistency violation. Reaching this is always a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace surfdeform
