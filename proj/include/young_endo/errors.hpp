#pragma once

#include <stdexcept>
#include <string>

namespace young_endo {

// Domain errors: the request is well-formed C++ but mathematically invalid
// (mismatched sizes, a set that is not upward closed, an orbit that is not
// available, a malformed partition).  The CLI maps these to exit code 1.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_partition_error : domain_error {
    using domain_error::domain_error;
};

struct size_mismatch_error : domain_error {
    using domain_error::domain_error;
};

struct not_cosaturated_error : domain_error {
    using domain_error::domain_error;
};

struct orbit_not_in_omega_error : domain_error {
    using domain_error::domain_error;
};

struct not_a_sublattice_error : domain_error {
    using domain_error::domain_error;
};

// Raised when a computation would enumerate more points than the configured
// cap allows.  The CLI maps this to exit code 2.
struct size_limit_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace young_endo
