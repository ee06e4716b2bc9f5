#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gdet/int.hpp"

namespace gdet {

// Groups whose achievable-determinant set this module can decide.
enum class GroupTag { C4, C2x2x2x2, C4xC2xC2, C4xC4, C8xC2, D16, C16 };

// One tag per closed-form term of a group's value-set description,
// named E<2-adic valuation>_<shape of the odd part>.
enum class Family {
    NonMember,
    Zero,
    // odd members
    OddAny,    // 2m+1
    Odd4m1,    // 4m+1
    Odd16m1,   // 16m+1
    OddC,      // (8k-3)(8l-3)(8m-3)(8n-3), three factors prime = 5 (mod 8), k+l != m+n (mod 2)
    OddD,      // (8k-3)(8l-3) with k = l (mod 2)
    // even members
    E4_any,    // 2^4 m
    E6_p_odd,  // 2^6 p (2m+1), p special (see below)
    E6_q2_odd, // 2^6 q^2 (2m+1), q prime = 3 (mod 8)
    E7_any,    // 2^7 m
    E10_odd,   // 2^10 (2m+1)
    E10_any,   // 2^10 m
    E11_p_odd, // 2^11 p (2m+1)
    E11_q2_odd,// 2^11 q^2 (2m+1)
    E12_any,   // 2^12 m
    E15_p5_odd,// 2^15 p (2m+1), p = 5 (mod 8)
    E16_4m1,   // 2^16 (4m+1)
    E16_8m3,   // 2^16 (8m+3)
    E16_A,     // 2^16 (8k-3)(8l+3)
    E16_B,     // 2^16 p (8m-1), p = a^2+b^2 = 1 (mod 8), a+b = +-3 (mod 8)
    E16_any,   // 2^16 m
    E17_P5,    // 2^17 p (2m+1), p = 5 (mod 8)
    E18_any,   // 2^18 m
    E24_4m1,   // 2^24 (4m+1)
    E24_8m3,   // 2^24 (8m+3)
    E24_A,     // 2^24 (8k-3)(8l+3)
    E26_any,   // 2^26 m
};

const char* to_string(Family f);
const char* to_string(GroupTag g);
std::optional<GroupTag> parse_group(const std::string& name);

// Membership verdict for one candidate value. params carry the named
// integers of the matched term (m, n, k, l, p as applicable) and always
// reconstruct the input; reason is a human-readable justification.
struct Classification {
    bool member = false;
    Family family = Family::NonMember;
    std::map<std::string, Int> params;
    std::string reason;
};

// u = (8k-3)(8l+3)? Complete scan over signed divisor pairs. Throws
// std::invalid_argument for even u.
std::optional<std::pair<Int, Int>> in_A(const Int& u);

// u = p (8m-1) for a prime p = a^2 + b^2 = 1 (mod 8) with a+b = +-3
// (mod 8)? Since such p forces the cofactor to be = -1 (mod 8), this
// reduces to u = -1 (mod 8) plus a qualifying prime factor, which is
// returned. Throws std::invalid_argument for even u.
std::optional<Int> in_B(const Int& u);

// u = (8k-3)(8l-3)(8m-3)(8n-3) with the three last factors prime
// = 5 (mod 8) and k+l != m+n (mod 2)? Returns (k, l, m, n).
std::optional<std::array<Int, 4>> in_C(const Int& u);

// u = (8k-3)(8l-3) with k = l (mod 2)? Returns (k, l).
std::optional<std::pair<Int, Int>> in_D(const Int& u);

// Decide membership of v in the value set of the 16-variable determinant
// over C4 x C2 x C2. The set is exactly
//   {16m+1}  u  {2^16 (4m+1)}  u  {2^16 (8m+3)}  u  {2^16 u' : u' in A u B}
//   u  {2^17 p (2m+1) : p prime = 5 (mod 8)}  u  {2^18 m}.
Classification classify_c4c2c2(const Int& v);

// Same decision for the other order-16 groups handled here (and C4,
// whose set is Z_odd u 2^4 Z). Each closed-form term of the group's set
// description maps to one Family tag.
Classification classify_group(GroupTag g, const Int& v);

}  // namespace gdet
