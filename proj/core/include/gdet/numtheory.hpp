#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gdet/int.hpp"

namespace gdet {

// Signed prime factorization. sign * prod(p^e) reconstructs the input
// exactly; sign is 0 (empty factor list) only for input 0.
struct Factorization {
    int sign = 0;
    std::vector<std::pair<Int, int>> factors;  // primes strictly increasing

    Int value() const;
    bool has_prime_with_residue(int r, int mod, int min_exponent = 1) const;
};

// Primality of |n|. Deterministic Miller-Rabin with the 13-prime base set
// {2, 3, ..., 37} for n < 3.317e24 (the proven bound for that set, which
// covers the full 64-bit range); Baillie-PSW for larger inputs up to 128
// bits, for which no counterexample is known. Inputs wider than 128 bits
// are rejected with std::domain_error.
bool is_prime(const Int& n);

// Complete factorization by trial division plus Brent-cycle Pollard rho.
// factor(0) returns sign 0. Rejects |n| >= 2^128 with std::domain_error.
Factorization factor(const Int& n);

// The essentially unique decomposition p = a^2 + b^2 of a prime
// p = 1 (mod 4), canonicalized to a even, a >= 0, b = 1 (mod 4)
// (b may be negative). Ascending scan over the odd leg for small p,
// Cornacchia descent from a square root of -1 (mod p) for large p.
// Throws std::invalid_argument unless p is prime and p = 1 (mod 4).
std::pair<Int, Int> two_squares(const Int& p);

// Residue class of a prime mod 8. For p = 1 (mod 8) the class further
// splits on the two-squares decomposition: P1_prime means a + b = +-3
// (mod 8) (well defined: a = 0 mod 4, so flipping the sign of b negates
// a + b mod 8). Throws std::invalid_argument for non-prime input.
enum class PrimeClass { Two, P1_prime, P1_plain, P3, P5, P7 };

PrimeClass classify_prime(const Int& p);

// Positive divisors of the factored value, ascending.
std::vector<Int> divisors(const Factorization& f);

// Every ordered pair (u, v) of integers with u * v = n: u runs over the
// positive divisors of |n| in ascending order, then their negatives.
// Throws std::invalid_argument for n = 0.
std::vector<std::pair<Int, Int>> divisor_pairs(const Int& n);

// Primes below 2^16, sieved once.
const std::vector<std::uint32_t>& small_primes();

}  // namespace gdet
