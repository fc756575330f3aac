#pragma once

#include <cstdint>

#include "wreath/error.hpp"

namespace wreath {

/// Exact counts. Every multiplicity and dimension uses this.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error("overflow", "integer overflow in addition");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error("overflow", "integer overflow in multiplication");
    return r;
}

inline Count checked_pow(Count base, unsigned exponent) {
    Count r = 1;
    for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
    return r;
}

inline Count factorial(unsigned n) {
    Count r = 1;
    for (unsigned i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

/// Binomial coefficient via the multiplicative formula; every intermediate
/// quotient is itself a binomial coefficient, so the division is exact.
inline Count binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // r * (n - k + i) / i, split to avoid a spurious overflow.
        Count num = n - k + i;
        Count g = std::uint64_t(i);
        Count a = r, b = num;
        // reduce by gcd so the product stays as small as possible
        auto gcd = [](Count x, Count y) {
            while (y) { Count t = x % y; x = y; y = t; }
            return x;
        };
        Count g1 = gcd(a, g);
        a /= g1; g /= g1;
        Count g2 = gcd(b, g);
        b /= g2; g /= g2;
        r = checked_mul(a, b) / g;
    }
    return r;
}

}  // namespace wreath
