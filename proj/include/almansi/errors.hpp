#pragma once

#include <stdexcept>

namespace almansi {

// Evaluation hit a point where a spherical derivative is undefined
// (beta_h = 0 on a stem that does not extend there).
struct SingularPointError : std::domain_error {
    using std::domain_error::domain_error;
};

// Operation requires structural information (exact component support,
// polynomial backing) that this object does not carry.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace almansi
