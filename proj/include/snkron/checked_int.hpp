#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "snkron/errors.hpp"

namespace snkron {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// Overflow-checked arithmetic. Character values at the shipped caps fit
// comfortably in 64 bits; aggregate sums that can exceed them (Kronecker
// accumulation, dimension numerators) escalate to BigInt instead.

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_overflow_error("64-bit overflow in addition; use the big-integer path");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_overflow_error("64-bit overflow in multiplication; use the big-integer path");
    return r;
}

inline BigInt big_factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// n! for n <= 20 fits in Int
inline Int factorial64(int n) {
    if (n > 20) throw arithmetic_overflow_error("factorial64: n > 20");
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace snkron
