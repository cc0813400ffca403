#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace twozero {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt acc = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

/// Exact binomial coefficient; 0 when k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;  // exact at every step
    }
    return acc;
}

/// Canonical "num/den" rendering (lowest terms, den > 0).  Integers
/// render with an explicit "/1" so the format is uniform.
inline std::string rational_string(const BigRat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace twozero
