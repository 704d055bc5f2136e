#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ribbonkit {

using Int = std::int64_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Malformed text input.
struct ParseError : Error {
    using Error::Error;
};
/// Argument outside an operation's domain (e.g. statistics of an all-ones composition).
struct DomainError : Error {
    using Error::Error;
};
/// 64-bit signed arithmetic overflowed. Never expected at desk scale; a loud bug signal.
struct OverflowError : Error {
    using Error::Error;
};
/// Basis or degree mismatch between symmetric-function vectors.
struct MismatchError : Error {
    using Error::Error;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Exact binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
inline Int binomial(Int n, Int k) {
    if (n < 0) throw DomainError("binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (Int i = 1; i <= k; ++i) {
        result = checked_mul(result, n - k + i);
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

inline int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs body(0..count-1) on `threads` workers (0 = hardware concurrency).
/// Rethrows the first worker exception after all workers join.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace ribbonkit
