#pragma once

#include <stdexcept>
#include <string>

namespace tgraded {

// Two objects that must live over the same piece family do not, or a point
// names a piece the family lacks.
class FamilyMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Geodesic enumeration produced more paths than the caller allowed.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tgraded
