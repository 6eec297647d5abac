#pragma once

#include <stdexcept>
#include <string>

namespace snkron {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |lhs| != |rhs| where equal weights are required
struct weight_mismatch_error : error {
    using error::error;
};

// HookRef does not describe a hook of the partition it is used with
struct invalid_hook_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

// a configured cap would be exceeded; message names the cap
struct cap_exceeded_error : error {
    using error::error;
};

struct not_self_conjugate_error : error {
    using error::error;
};

// chi^mu(lambda) == 0 where a nonzero center value is required
struct zero_center_error : error {
    using error::error;
};

// |h| occurs among the parts of lambda
struct hook_collision_error : error {
    using error::error;
};

// (alpha, beta) is not one of the tabulated hook pairs
struct unsupported_pair_error : error {
    using error::error;
};

struct arithmetic_overflow_error : error {
    using error::error;
};

}  // namespace snkron
