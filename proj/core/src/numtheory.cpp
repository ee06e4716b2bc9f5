#include "gdet/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gdet {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

// a, b < m; safe against wraparound for m close to 2^64
u64 addmod64(u64 a, u64 b, u64 m) { return a >= m - b ? a - (m - b) : a + b; }

u64 powmod64(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod64(result, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// proven deterministic for n < 3,317,044,064,679,887,385,961,981
constexpr u64 kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : kMrBases) {
        if (n % p == 0) return n == p;
    }
    const int r = __builtin_ctzll(n - 1);
    const u64 d = (n - 1) >> r;
    for (u64 base : kMrBases) {
        u64 x = powmod64(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---- primality for inputs beyond 64 bits ----------------------------------

Int powmod_big(Int base, Int exp, const Int& m) {
    Int result = 1;
    base = mod_floor(base, m);
    while (exp > 0) {
        if ((exp & 1) != 0) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_big(const Int& n) {
    const Int n1 = n - 1;
    const unsigned r = v2(n1);
    const Int d = n1 >> r;
    for (u64 base : kMrBases) {
        Int x = powmod_big(base, d, n);
        if (x == 1 || x == n1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int jacobi(Int a, Int n) {
    a = mod_floor(a, n);
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const int r = residue(n, 8);
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (residue(a, 4) == 3 && residue(n, 4) == 3) result = -result;
        a = a % n;
    }
    return n == 1 ? result : 0;
}

// strong Lucas probable-prime test, Selfridge parameters (n odd, not a square)
bool strong_lucas(const Int& n) {
    Int d = 5;
    for (int sign = 1;; sign = -sign, d += 2) {
        const Int candidate = sign > 0 ? d : Int(-d);
        const int j = jacobi(candidate, n);
        if (j == -1) {
            d = candidate;
            break;
        }
        if (j == 0) return false;  // shares a factor with n (|candidate| << n here)
    }
    const Int p = 1, q = (1 - d) / 4;

    const Int delta = n + 1;
    const unsigned s = v2(delta);
    const Int k = delta >> s;

    Int u = 0, v = 2, qk = 1;  // (U_0, V_0, Q^0)
    for (unsigned i = bit_width(k); i-- > 0;) {
        u = mod_floor(u * v, n);
        v = mod_floor(v * v - 2 * qk, n);
        qk = mod_floor(qk * qk, n);
        if (boost::multiprecision::bit_test(k, i)) {
            Int tu = p * u + v;
            if ((tu & 1) != 0) tu += n;
            tu >>= 1;
            Int tv = d * u + p * v;
            if ((tv & 1) != 0) tv += n;
            tv >>= 1;
            u = mod_floor(tu, n);
            v = mod_floor(tv, n);
            qk = mod_floor(qk * q, n);
        }
    }
    if (u == 0 || v == 0) return true;
    for (unsigned i = 1; i < s; ++i) {
        v = mod_floor(v * v - 2 * qk, n);
        if (v == 0) return true;
        qk = mod_floor(qk * qk, n);
    }
    return false;
}

void require_width(const Int& n, const char* who) {
    if (bit_width(n) > 128)
        throw std::domain_error(std::string(who) +
                                ": inputs wider than 128 bits are not accepted");
}

// ---- factorization ----------------------------------------------------------

u64 rho_brent_u64(u64 n, u64 seed) {
    while (true) {
        const u64 c = seed % (n - 2) + 1;
        u64 y = seed % n, q = 1, g = 1, x = 0, ys = 0;
        constexpr u64 kBatch = 128;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = addmod64(mulmod64(y, y, n), c, n);
            for (u64 j = 0; j < r && g == 1; j += kBatch) {
                ys = y;
                const u64 lim = std::min(kBatch, r - j);
                for (u64 i = 0; i < lim; ++i) {
                    y = addmod64(mulmod64(y, y, n), c, n);
                    q = mulmod64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            g = 1;
            do {
                ys = addmod64(mulmod64(ys, ys, n), c, n);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    }
}

void split_u64(u64 n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (miller_rabin_u64(n)) {
        ++out[Int(n)];
        return;
    }
    const u64 d = rho_brent_u64(n, 0x5851F42D4C957F2DULL);
    split_u64(d, out);
    split_u64(n / d, out);
}

Int rho_big(const Int& n, u64 seed) {
    // plain Pollard rho with Floyd cycle detection; only reached for
    // composites > 2^64 whose factors all exceed the trial bound
    while (true) {
        Int c = 1 + mod_floor(Int(seed), n - 1);
        Int x = 2, y = 2, g = 1;
        auto step = [&](const Int& v) { return mod_floor(v * v + c, n); };
        while (g == 1) {
            x = step(x);
            y = step(step(y));
            g = boost::multiprecision::gcd(boost::multiprecision::abs(x - y), n);
        }
        if (g != n) return g;
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    }
}

void split_big(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (n <= std::numeric_limits<u64>::max()) {
        split_u64(n.convert_to<u64>(), out);
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const Int d = rho_big(n, 0x9E3779B97F4A7C15ULL);
    split_big(d, out);
    split_big(n / d, out);
}

}  // namespace

Int Factorization::value() const {
    if (sign == 0) return 0;
    Int v = sign;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

bool Factorization::has_prime_with_residue(int r, int mod, int min_exponent) const {
    for (const auto& [p, e] : factors)
        if (e >= min_exponent && residue(p, mod) == r) return true;
    return false;
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t kLimit = 1 << 16;
        std::vector<bool> composite(kLimit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < kLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < kLimit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool is_prime(const Int& n) {
    Int a = boost::multiprecision::abs(n);
    if (a <= std::numeric_limits<u64>::max()) return miller_rabin_u64(a.convert_to<u64>());
    require_width(a, "is_prime");
    for (std::uint32_t p : small_primes())
        if (a % p == 0) return false;
    if (is_perfect_square(a)) return false;
    if (!miller_rabin_big(a)) return false;
    static const Int kProvenBound("3317044064679887385961981");
    if (a < kProvenBound) return true;
    return strong_lucas(a);
}

Factorization factor(const Int& n) {
    Factorization f;
    if (n == 0) return f;
    f.sign = n < 0 ? -1 : 1;
    Int a = boost::multiprecision::abs(n);
    require_width(a, "factor");

    std::map<Int, int> found;
    if (a <= std::numeric_limits<u64>::max()) {
        // machine-word trial division; the bulk of all calls land here
        u64 v = a.convert_to<u64>();
        for (std::uint32_t p : small_primes()) {
            if (u64(p) * p > v) break;
            while (v % p == 0) {
                ++found[Int(p)];
                v /= p;
            }
        }
        split_u64(v, found);
    } else {
        for (std::uint32_t p : small_primes()) {
            if (Int(p) * p > a) break;
            while (a % p == 0) {
                ++found[Int(p)];
                a /= p;
            }
        }
        split_big(a, found);
    }
    f.factors.assign(found.begin(), found.end());
    return f;
}

std::pair<Int, Int> two_squares(const Int& p) {
    if (residue(p, 4) != 1 || !is_prime(p))
        throw std::invalid_argument("two_squares: argument must be a prime = 1 (mod 4)");

    Int even_leg = 0, odd_leg = 0;
    if (p < (Int(1) << 46)) {
        for (Int t = 1; t * t <= p; t += 2) {
            Int s;
            if (is_perfect_square(p - t * t, &s)) {
                even_leg = s;  // p = 1 (mod 4) and t odd force s even
                odd_leg = t;
                break;
            }
        }
    } else {
        // Cornacchia: descend from a square root of -1 (mod p)
        Int x = 0;
        for (std::uint32_t q : small_primes()) {
            if (powmod_big(q, (p - 1) / 2, p) == p - 1) {
                x = powmod_big(q, (p - 1) / 4, p);
                break;
            }
        }
        Int r0 = p, r1 = x;
        while (r1 * r1 > p) {
            Int t = r0 % r1;
            r0 = r1;
            r1 = t;
        }
        Int s;
        if (!is_perfect_square(p - r1 * r1, &s))
            throw std::logic_error("two_squares: Cornacchia descent failed");
        if ((r1 & 1) == 0) {
            even_leg = r1;
            odd_leg = s;
        } else {
            even_leg = s;
            odd_leg = r1;
        }
    }
    if (even_leg == 0 && odd_leg == 0)
        throw std::logic_error("two_squares: no representation found");
    Int b = residue(odd_leg, 4) == 1 ? odd_leg : Int(-odd_leg);
    return {even_leg, b};
}

PrimeClass classify_prime(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("classify_prime: argument must be prime");
    if (p == 2 || p == -2) return PrimeClass::Two;
    const Int a = boost::multiprecision::abs(p);
    switch (residue(a, 8)) {
        case 3: return PrimeClass::P3;
        case 5: return PrimeClass::P5;
        case 7: return PrimeClass::P7;
        default: break;
    }
    const auto [x, y] = two_squares(a);
    const int r = residue(x + y, 8);
    return (r == 3 || r == 5) ? PrimeClass::P1_prime : PrimeClass::P1_plain;
}

std::vector<Int> divisors(const Factorization& f) {
    std::vector<Int> out{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = out.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Int, Int>> divisor_pairs(const Int& n) {
    if (n == 0) throw std::invalid_argument("divisor_pairs: n must be nonzero");
    const std::vector<Int> divs = divisors(factor(n));
    std::vector<std::pair<Int, Int>> pairs;
    pairs.reserve(2 * divs.size());
    for (const Int& u : divs) pairs.emplace_back(u, n / u);
    for (const Int& u : divs) pairs.emplace_back(-u, -(n / u));
    return pairs;
}

}  // namespace gdet
