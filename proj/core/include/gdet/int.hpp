#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace gdet {

// All determinant and number-theoretic arithmetic is exact. Degree-16
// products overflow 64-bit machine words even for single-digit
// coefficients, so the working integer type is arbitrary precision.
using Int = boost::multiprecision::cpp_int;

// Mathematical residue in [0, m), independent of the sign of n.
inline Int mod_floor(const Int& n, const Int& m) {
    Int r = n % m;
    if (r < 0) r += m;
    return r;
}

// Residue helper for small moduli (m <= 2^31), returned as a plain int.
inline int residue(const Int& n, int m) {
    return static_cast<int>(mod_floor(n, m));
}

// 2-adic valuation of n; n must be nonzero.
inline unsigned v2(const Int& n) {
    if (n == 0) throw std::invalid_argument("v2: zero has no finite 2-adic valuation");
    return boost::multiprecision::lsb(n < 0 ? Int(-n) : n);
}

inline Int isqrt_floor(const Int& n) {
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int s = boost::multiprecision::sqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

inline unsigned bit_width(const Int& n) {
    if (n == 0) return 0;
    return boost::multiprecision::msb(n < 0 ? Int(-n) : n) + 1;
}

}  // namespace gdet
