#include "gdet/witness.hpp"

#include "gdet/numtheory.hpp"

namespace gdet {

namespace {

Witness verified_witness(const Int& target, CoeffVec16 coeffs, Family family) {
    Witness w;
    w.target = target;
    w.coeffs = std::move(coeffs);
    w.family = family;
    const Int got = det_c4c2c2_matrix(w.coeffs);
    if (got != target)
        throw InternalError("witness verification failed: construction for " + target.str() +
                            " evaluates to " + got.str());
    w.verified = true;
    return w;
}

}  // namespace

CoeffVec16 witness_odd(const Int& m) {
    CoeffVec16 a;
    a.fill(m);
    a[0] = m + 1;
    return a;
}

CoeffVec16 witness_e16_4m1(const Int& m) {
    CoeffVec16 a;
    a.fill(m);
    a[0] = m + 1;
    a[1] = m + 1;
    a[2] = m + 2;
    return a;
}

CoeffVec16 witness_e16_4m1_8n3(const Int& m, const Int& n) {
    return {m + n + 1, m + n + 1, m + n + 1, m + n + 1,
            m - n,     m - n,     m - n,     m - n,
            m + n + 1, m + n,     m + n + 1, m + n - 1,
            m - n - 1, m - n,     m - n,     m - n};
}

CoeffVec16 witness_e18_odd(const Int& m) {
    return {m + 2, m,     m + 2, m + 1, m, m, m, m,
            m + 1, m + 1, m,     m + 1, m, m, m, m};
}

CoeffVec16 witness_e18_even(const Int& m) {
    return {m + 1, m,     m + 1, m,     m, m - 1, m,     m,
            m,     m + 1, m,     m + 1, m, m - 1, m - 1, m - 1};
}

CoeffVec16 witness_pprime(const Int& p, const Int& m) {
    if (!is_prime(p) || classify_prime(p) != PrimeClass::P1_prime)
        throw std::domain_error("witness_pprime: p must be prime with p = a^2+b^2 = 1 (mod 8) "
                                "and a+b = +-3 (mod 8)");
    const auto [a, b] = two_squares(p);
    // a = 4r (sign of a does not affect the parity of r), b = 4s+1
    const Int r = a / 4;
    const Int s = (b - 1) / 4;
    if (residue(r - s, 2) != 1)
        throw InternalError("witness_pprime: parity invariant r != s (mod 2) violated");
    const Int k = (r + s + 1) / 2;
    const Int l = (r - s - 1) / 2;
    if (2 * p != (8 * k - 3) * (8 * k - 3) + (8 * l + 3) * (8 * l + 3))
        throw InternalError("witness_pprime: 2p = (8k-3)^2 + (8l+3)^2 violated");
    return {k - m, l - m + 1, -k - m + 1, -l - m,
            k + m, l + m + 1, -k + m + 1, -l + m,
            k - m, l - m + 1, -k - m + 1, -l - m,
            k + m - 1, l + m, -k + m - 1, -l + m};
}

CoeffVec16 witness_p5(const Int& p, const Int& m) {
    if (!is_prime(p) || residue(p, 8) != 5)
        throw std::domain_error("witness_p5: p must be a prime = 5 (mod 8)");
    const auto [a, b] = two_squares(p);
    const Int s = (b - 1) / 4;
    // a = 4r+2 up to sign; flipping the sign maps r to -r-1, so exactly one
    // choice matches the parity of s
    Int r = (a - 2) / 4;
    if (residue(r - s, 2) != 0) r = (-a - 2) / 4;
    if (residue(r - s, 2) != 0)
        throw InternalError("witness_p5: parity invariant r = s (mod 2) violated");
    const Int k = (r + s) / 2;
    const Int l = (r - s) / 2;
    if (2 * p != (8 * k + 3) * (8 * k + 3) + (8 * l + 1) * (8 * l + 1))
        throw InternalError("witness_p5: 2p = (8k+3)^2 + (8l+1)^2 violated");
    return {m + l + 1, m + k + 1, m - l + 1, m - k,
            m + l + 1, m + k + 1, m - l + 1, m - k,
            m + l + 1, m + k + 1, m - l + 1, m - k,
            m + l,     m + k,     m - l - 1, m - k};
}

Witness synthesize(const Int& v) {
    Classification c = classify_c4c2c2(v);
    if (!c.member) throw NonMemberError(std::move(c));

    switch (c.family) {
        case Family::Odd16m1:
            return verified_witness(v, witness_odd(c.params.at("m")), c.family);
        case Family::E16_4m1:
            return verified_witness(v, witness_e16_4m1(c.params.at("m")), c.family);
        case Family::E16_8m3:
            // (4m+1)(8n+3) with the trivial split 4m+1 = 1
            return verified_witness(v, witness_e16_4m1_8n3(0, c.params.at("m")), c.family);
        case Family::E16_A: {
            // (8k-3)(8l+3) = (4(2k-1)+1)(8l+3)
            const Int m = 2 * c.params.at("k") - 1;
            return verified_witness(v, witness_e16_4m1_8n3(m, c.params.at("l")), c.family);
        }
        case Family::E16_B: {
            const Int p = c.params.at("p");
            const Int cofactor = (v >> 16) / p;  // = -1 (mod 8), so = 4m-1
            return verified_witness(v, witness_pprime(p, (cofactor + 1) / 4), c.family);
        }
        case Family::E17_P5: {
            const Int p = c.params.at("p");
            return verified_witness(v, witness_p5(p, c.params.at("m")), c.family);
        }
        case Family::E18_any: {
            const Int t = c.params.at("m");
            if ((t & 1) != 0) return verified_witness(v, witness_e18_odd((t - 1) / 2), c.family);
            return verified_witness(v, witness_e18_even(t / 2), c.family);
        }
        case Family::Zero:
            return verified_witness(v, witness_e18_even(0), c.family);
        default:
            throw InternalError("synthesize: unexpected family " +
                                std::string(to_string(c.family)));
    }
}

}  // namespace gdet
