#pragma once

#include <stdexcept>

namespace cochar {

// 64-bit arithmetic that refuses to wrap. Dimensions and multiplicities at
// the degrees this library handles fit comfortably; anything larger is a bug.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("checked_add: 64-bit overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("checked_mul: 64-bit overflow");
    return r;
}

long long checked_factorial(int n);
long long checked_binomial(int n, int k);

} // namespace cochar
