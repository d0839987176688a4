// errors.hpp — Error types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace ramanchain {

// Thrown when a brute-force request exceeds its configured size cap.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an energy denominator of the second-order sum vanishes.
struct singular_denominator_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid inputs throw std::invalid_argument; degenerate inputs (zero vector
// to normalize, vanishing scattered image, n_i = 0 enhancement) throw
// std::domain_error.

} // namespace ramanchain
