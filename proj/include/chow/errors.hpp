#pragma once
#include <stdexcept>
#include <string>

namespace chow {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invalid ring specification or operands from different specs
struct spec_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

// a mathematical precondition failed (non-homogeneous input, no preimage,
// inconsistent linear system, class does not descend, ...)
struct algebra_error : error {
    using error::error;
};

// step budget exhausted in a basis computation
struct resource_error : error {
    using error::error;
};

// missing, corrupted or malformed fixture data
struct fixture_error : error {
    using error::error;
};

}  // namespace chow
