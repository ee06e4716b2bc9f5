#include "gdet/sets.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

#include "gdet/numtheory.hpp"

namespace gdet {

namespace {

std::string str(const Int& v) { return v.str(); }

void require_odd(const Int& u, const char* who) {
    if ((u & 1) == 0) throw std::invalid_argument(std::string(who) + ": argument must be odd");
}

std::optional<std::pair<Int, Int>> scan_A(const Int& u, const Factorization& f) {
    for (bool neg : {false, true}) {
        for (const Int& d : divisors(f)) {
            const Int u1 = neg ? Int(-d) : d;
            const Int u2 = u / u1;
            if (residue(u1, 8) == 5 && residue(u2, 8) == 3)
                return std::make_pair((u1 + 3) / 8, (u2 - 3) / 8);
        }
    }
    return std::nullopt;
}

std::optional<Int> scan_B(const Int& u, const Factorization& f) {
    if (residue(u, 8) != 7) return std::nullopt;
    for (const auto& [p, e] : f.factors) {
        if (residue(p, 8) == 1 && classify_prime(p) == PrimeClass::P1_prime) return p;
    }
    return std::nullopt;
}

std::optional<std::pair<Int, Int>> scan_D(const Int& u, const Factorization& f) {
    for (bool neg : {false, true}) {
        for (const Int& d : divisors(f)) {
            const Int u1 = neg ? Int(-d) : d;
            const Int u2 = u / u1;
            if (residue(u1, 8) != 5 || residue(u2, 8) != 5) continue;
            const Int k = (u1 + 3) / 8;
            const Int l = (u2 + 3) / 8;
            if (residue(k - l, 2) == 0) return std::make_pair(k, l);
        }
    }
    return std::nullopt;
}

std::optional<std::array<Int, 4>> scan_C(const Int& u, const Factorization& f) {
    std::vector<Int> p5;  // prime factors = 5 (mod 8), with multiplicity
    for (const auto& [p, e] : f.factors) {
        if (residue(p, 8) != 5) continue;
        for (int i = 0; i < std::min(e, 3); ++i) p5.push_back(p);
    }
    std::set<std::tuple<Int, Int, Int>> tried;
    for (std::size_t i = 0; i < p5.size(); ++i) {
        for (std::size_t j = i + 1; j < p5.size(); ++j) {
            for (std::size_t h = j + 1; h < p5.size(); ++h) {
                if (!tried.insert({p5[i], p5[j], p5[h]}).second) continue;
                const Int c = u / (p5[i] * p5[j] * p5[h]);
                if (residue(c, 8) != 5) continue;
                const Int k = (c + 3) / 8;
                const std::array<Int, 3> q{p5[i], p5[j], p5[h]};
                for (int pick = 0; pick < 3; ++pick) {
                    const Int l = (q[pick] + 3) / 8;
                    const Int m = (q[(pick + 1) % 3] + 3) / 8;
                    const Int n = (q[(pick + 2) % 3] + 3) / 8;
                    if (residue(k + l - m - n, 2) != 0)
                        return std::array<Int, 4>{k, l, m, n};
                }
            }
        }
    }
    return std::nullopt;
}

// first prime factor = 5 (mod 8), or = a^2+b^2 = 1 (mod 8) with
// a+b = +-3 (mod 8)
std::optional<Int> p5_or_pprime_factor(const Factorization& f) {
    for (const auto& [p, e] : f.factors)
        if (residue(p, 8) == 5) return p;
    for (const auto& [p, e] : f.factors)
        if (residue(p, 8) == 1 && classify_prime(p) == PrimeClass::P1_prime) return p;
    return std::nullopt;
}

std::optional<Int> p3_square_factor(const Factorization& f) {
    for (const auto& [p, e] : f.factors)
        if (e >= 2 && residue(p, 8) == 3) return p;
    return std::nullopt;
}

Classification member(Family fam, std::map<std::string, Int> params, std::string reason) {
    Classification c;
    c.member = true;
    c.family = fam;
    c.params = std::move(params);
    c.reason = std::move(reason);
    return c;
}

Classification non_member(std::string reason) {
    Classification c;
    c.reason = std::move(reason);
    return c;
}

Classification zero_member(int valuation_term) {
    return member(Family::Zero, {{"m", 0}},
                  "0 = 2^" + std::to_string(valuation_term) + " * 0");
}

// split even v as 2^w * u with u odd
std::pair<unsigned, Int> split_even(const Int& v) {
    const unsigned w = v2(v);
    return {w, v >> w};
}

Classification classify_c4(const Int& v) {
    if (v == 0) return zero_member(4);
    if ((v & 1) != 0) return member(Family::OddAny, {{"m", (v - 1) / 2}}, "odd value 2m+1");
    const auto [w, u] = split_even(v);
    if (w >= 4)
        return member(Family::E4_any, {{"m", v >> 4}}, "2^4 * " + str(v >> 4));
    return non_member("even members are divisible by 2^4; 2-adic valuation is " +
                      std::to_string(w));
}

Classification classify_c2222(const Int& v) {
    if (v == 0) return zero_member(26);
    if ((v & 1) != 0) {
        if (residue(v, 16) == 1)
            return member(Family::Odd16m1, {{"m", (v - 1) / 16}}, "odd value 16m+1");
        return non_member("odd members are = 1 (mod 16); value is = " +
                          std::to_string(residue(v, 16)) + " (mod 16)");
    }
    const auto [w, u] = split_even(v);
    if (w == 16) {
        if (residue(u, 4) == 1)
            return member(Family::E16_4m1, {{"m", (u - 1) / 4}}, "2^16 (4m+1)");
        return non_member("at 2-adic valuation 16 the odd part must be = 1 (mod 4)");
    }
    if (w == 24) {
        if (residue(u, 4) == 1)
            return member(Family::E24_4m1, {{"m", (u - 1) / 4}}, "2^24 (4m+1)");
        if (residue(u, 8) == 3)
            return member(Family::E24_8m3, {{"m", (u - 3) / 8}}, "2^24 (8m+3)");
        if (auto kl = scan_A(u, factor(u)))
            return member(Family::E24_A, {{"k", kl->first}, {"l", kl->second}},
                          "2^24 (8k-3)(8l+3)");
        return non_member("at 2-adic valuation 24 the odd part is = 7 (mod 8) but has no "
                          "factorization (8k-3)(8l+3)");
    }
    if (w >= 26) return member(Family::E26_any, {{"m", v >> 26}}, "2^26 m");
    return non_member("no term matches 2-adic valuation " + std::to_string(w));
}

Classification classify_c4c4(const Int& v) {
    if (v == 0) return zero_member(16);
    if ((v & 1) != 0) {
        if (residue(v, 16) == 1)
            return member(Family::Odd16m1, {{"m", (v - 1) / 16}}, "odd value 16m+1");
        if (auto klmn = scan_C(v, factor(v)))
            return member(Family::OddC,
                          {{"k", (*klmn)[0]}, {"l", (*klmn)[1]}, {"m", (*klmn)[2]}, {"n", (*klmn)[3]}},
                          "(8k-3)(8l-3)(8m-3)(8n-3) with three prime factors = 5 (mod 8) "
                          "and k+l != m+n (mod 2)");
        return non_member("odd value neither = 1 (mod 16) nor a qualifying four-fold "
                          "product of integers = 5 (mod 8)");
    }
    const auto [w, u] = split_even(v);
    if (w == 15) {
        if (auto p = [&]() -> std::optional<Int> {
                const Factorization f = factor(u);
                for (const auto& [q, e] : f.factors)
                    if (residue(q, 8) == 5) return q;
                return std::nullopt;
            }())
            return member(Family::E15_p5_odd, {{"p", *p}, {"m", (u / *p - 1) / 2}},
                          "2^15 p (2m+1) with p = " + str(*p) + " = 5 (mod 8)");
        return non_member("at 2-adic valuation 15 the odd part needs a prime factor "
                          "= 5 (mod 8)");
    }
    if (w >= 16) return member(Family::E16_any, {{"m", v >> 16}}, "2^16 m");
    return non_member("no term matches 2-adic valuation " + std::to_string(w));
}

Classification classify_c8c2(const Int& v) {
    if (v == 0) return zero_member(12);
    if ((v & 1) != 0) {
        if (residue(v, 16) == 1)
            return member(Family::Odd16m1, {{"m", (v - 1) / 16}}, "odd value 16m+1");
        if (auto kl = scan_D(v, factor(v)))
            return member(Family::OddD, {{"k", kl->first}, {"l", kl->second}},
                          "(8k-3)(8l-3) with k = l (mod 2)");
        return non_member("odd value neither = 1 (mod 16) nor of the form "
                          "(8k-3)(8l-3) with k = l (mod 2)");
    }
    const auto [w, u] = split_even(v);
    if (w == 10)
        return member(Family::E10_odd, {{"m", (u - 1) / 2}}, "2^10 (2m+1)");
    if (w == 11) {
        const Factorization f = factor(u);
        if (auto p = p5_or_pprime_factor(f))
            return member(Family::E11_p_odd, {{"p", *p}, {"m", (u / *p - 1) / 2}},
                          "2^11 p (2m+1) with qualifying prime p = " + str(*p));
        if (auto q = p3_square_factor(f))
            return member(Family::E11_q2_odd, {{"q", *q}, {"m", (u / (*q * *q) - 1) / 2}},
                          "2^11 q^2 (2m+1) with q = " + str(*q) + " = 3 (mod 8)");
        return non_member("at 2-adic valuation 11 the odd part needs a qualifying prime "
                          "factor or the square of a prime = 3 (mod 8)");
    }
    if (w >= 12) return member(Family::E12_any, {{"m", v >> 12}}, "2^12 m");
    return non_member("no term matches 2-adic valuation " + std::to_string(w));
}

Classification classify_d16(const Int& v) {
    if (v == 0) return zero_member(10);
    if ((v & 1) != 0) {
        if (residue(v, 4) == 1)
            return member(Family::Odd4m1, {{"m", (v - 1) / 4}}, "odd value 4m+1");
        return non_member("odd members are = 1 (mod 4)");
    }
    const auto [w, u] = split_even(v);
    if (w >= 10) return member(Family::E10_any, {{"m", v >> 10}}, "2^10 m");
    return non_member("even members are divisible by 2^10; 2-adic valuation is " +
                      std::to_string(w));
}

Classification classify_c16(const Int& v) {
    if (v == 0) return zero_member(7);
    if ((v & 1) != 0)
        return member(Family::OddAny, {{"m", (v - 1) / 2}}, "odd value 2m+1");
    const auto [w, u] = split_even(v);
    if (w == 6) {
        const Factorization f = factor(u);
        if (auto p = p5_or_pprime_factor(f))
            return member(Family::E6_p_odd, {{"p", *p}, {"m", (u / *p - 1) / 2}},
                          "2^6 p (2m+1) with qualifying prime p = " + str(*p));
        if (auto q = p3_square_factor(f))
            return member(Family::E6_q2_odd, {{"q", *q}, {"m", (u / (*q * *q) - 1) / 2}},
                          "2^6 q^2 (2m+1) with q = " + str(*q) + " = 3 (mod 8)");
        return non_member("at 2-adic valuation 6 the odd part needs a qualifying prime "
                          "factor or the square of a prime = 3 (mod 8)");
    }
    if (w >= 7) return member(Family::E7_any, {{"m", v >> 7}}, "2^7 m");
    return non_member("no term matches 2-adic valuation " + std::to_string(w));
}

}  // namespace

std::optional<std::pair<Int, Int>> in_A(const Int& u) {
    require_odd(u, "in_A");
    return scan_A(u, factor(u));
}

std::optional<Int> in_B(const Int& u) {
    require_odd(u, "in_B");
    return scan_B(u, factor(u));
}

std::optional<std::array<Int, 4>> in_C(const Int& u) {
    require_odd(u, "in_C");
    return scan_C(u, factor(u));
}

std::optional<std::pair<Int, Int>> in_D(const Int& u) {
    require_odd(u, "in_D");
    return scan_D(u, factor(u));
}

Classification classify_c4c2c2(const Int& v) {
    if (v == 0) return zero_member(18);

    if ((v & 1) != 0) {
        if (residue(v, 16) == 1)
            return member(Family::Odd16m1, {{"m", (v - 1) / 16}},
                          "odd value 16m+1 with m = " + str((v - 1) / 16));
        return non_member("odd values must be = 1 (mod 16); value is = " +
                          std::to_string(residue(v, 16)) + " (mod 16)");
    }

    const auto [w, u] = split_even(v);
    if (w < 16)
        return non_member("even members are divisible by 2^16; 2-adic valuation is only " +
                          std::to_string(w));
    if (w == 16) {
        if (residue(u, 4) == 1)
            return member(Family::E16_4m1, {{"m", (u - 1) / 4}},
                          "2^16 (4m+1) with m = " + str((u - 1) / 4));
        if (residue(u, 8) == 3)
            return member(Family::E16_8m3, {{"m", (u - 3) / 8}},
                          "2^16 (8m+3) with m = " + str((u - 3) / 8));
        // remaining residue class: u = 7 (mod 8)
        const Factorization f = factor(u);
        if (auto kl = scan_A(u, f))
            return member(Family::E16_A, {{"k", kl->first}, {"l", kl->second}},
                          "2^16 (8k-3)(8l+3) with k = " + str(kl->first) +
                              ", l = " + str(kl->second));
        if (auto p = scan_B(u, f))
            return member(Family::E16_B, {{"p", *p}, {"m", (u / *p + 1) / 8}},
                          "2^16 p (8m-1) with p = " + str(*p) +
                              " = a^2+b^2 = 1 (mod 8), a+b = +-3 (mod 8)");
        return non_member("odd part " + str(u) +
                          " = 7 (mod 8) but admits neither a factorization (8k-3)(8l+3) "
                          "nor a prime factor p = a^2+b^2 = 1 (mod 8) with a+b = +-3 (mod 8)");
    }
    if (w == 17) {
        const Factorization f = factor(u);
        for (const auto& [p, e] : f.factors) {
            if (residue(p, 8) == 5)
                return member(Family::E17_P5, {{"p", p}, {"m", (u / p - 1) / 2}},
                              "2^17 p (2m+1) with p = " + str(p) + " = 5 (mod 8)");
        }
        return non_member("2-adic valuation 17 requires a prime factor = 5 (mod 8) in the "
                          "odd part " + str(u));
    }
    return member(Family::E18_any, {{"m", v >> 18}}, "2^18 m with m = " + str(v >> 18));
}

Classification classify_group(GroupTag g, const Int& v) {
    switch (g) {
        case GroupTag::C4: return classify_c4(v);
        case GroupTag::C2x2x2x2: return classify_c2222(v);
        case GroupTag::C4xC2xC2: return classify_c4c2c2(v);
        case GroupTag::C4xC4: return classify_c4c4(v);
        case GroupTag::C8xC2: return classify_c8c2(v);
        case GroupTag::D16: return classify_d16(v);
        case GroupTag::C16: return classify_c16(v);
    }
    throw std::invalid_argument("classify_group: unknown group tag");
}

const char* to_string(Family f) {
    switch (f) {
        case Family::NonMember: return "NonMember";
        case Family::Zero: return "Zero";
        case Family::OddAny: return "OddAny";
        case Family::Odd4m1: return "Odd4m1";
        case Family::Odd16m1: return "Odd16m1";
        case Family::OddC: return "OddC";
        case Family::OddD: return "OddD";
        case Family::E4_any: return "E4_any";
        case Family::E6_p_odd: return "E6_p_odd";
        case Family::E6_q2_odd: return "E6_q2_odd";
        case Family::E7_any: return "E7_any";
        case Family::E10_odd: return "E10_odd";
        case Family::E10_any: return "E10_any";
        case Family::E11_p_odd: return "E11_p_odd";
        case Family::E11_q2_odd: return "E11_q2_odd";
        case Family::E12_any: return "E12_any";
        case Family::E15_p5_odd: return "E15_p5_odd";
        case Family::E16_4m1: return "E16_4m1";
        case Family::E16_8m3: return "E16_8m3";
        case Family::E16_A: return "E16_A";
        case Family::E16_B: return "E16_B";
        case Family::E16_any: return "E16_any";
        case Family::E17_P5: return "E17_P5";
        case Family::E18_any: return "E18_any";
        case Family::E24_4m1: return "E24_4m1";
        case Family::E24_8m3: return "E24_8m3";
        case Family::E24_A: return "E24_A";
        case Family::E26_any: return "E26_any";
    }
    return "?";
}

const char* to_string(GroupTag g) {
    switch (g) {
        case GroupTag::C4: return "C4";
        case GroupTag::C2x2x2x2: return "C2x2x2x2";
        case GroupTag::C4xC2xC2: return "C4xC2xC2";
        case GroupTag::C4xC4: return "C4xC4";
        case GroupTag::C8xC2: return "C8xC2";
        case GroupTag::D16: return "D16";
        case GroupTag::C16: return "C16";
    }
    return "?";
}

std::optional<GroupTag> parse_group(const std::string& name) {
    for (GroupTag g : {GroupTag::C4, GroupTag::C2x2x2x2, GroupTag::C4xC2xC2, GroupTag::C4xC4,
                       GroupTag::C8xC2, GroupTag::D16, GroupTag::C16}) {
        if (name == to_string(g)) return g;
    }
    return std::nullopt;
}

}  // namespace gdet
