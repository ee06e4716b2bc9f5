#include <doctest.h>

#include <stdexcept>

#include "gdet/numtheory.hpp"
#include "gdet/rng.hpp"
#include "gdet/witness.hpp"

using gdet::CoeffVec16;
using gdet::Family;
using gdet::Int;

namespace {

Int oracle(const CoeffVec16& a) { return gdet::det_c4c2c2_matrix(a); }

}  // namespace

TEST_SUITE_BEGIN("witness");

TEST_CASE("odd construction") {
    CoeffVec16 expect{};
    expect[0] = 1;
    CHECK(gdet::witness_odd(0) == expect);
    CHECK(oracle(gdet::witness_odd(0)) == 1);
    CHECK(oracle(gdet::witness_odd(1)) == 17);
    CHECK(oracle(gdet::witness_odd(-1)) == -15);
}

TEST_CASE("2^16 (4m+1) construction") {
    CHECK(oracle(gdet::witness_e16_4m1(0)) == 65536);
    CHECK(oracle(gdet::witness_e16_4m1(-1)) == -3 * (Int(1) << 16));
    CHECK(oracle(gdet::witness_e16_4m1(1)) == 5 * (Int(1) << 16));
}

TEST_CASE("2^16 (4m+1)(8n+3) construction") {
    CHECK(oracle(gdet::witness_e16_4m1_8n3(0, 0)) == 3 * (Int(1) << 16));
    CHECK(oracle(gdet::witness_e16_4m1_8n3(1, 0)) == 15 * (Int(1) << 16));
    CHECK(oracle(gdet::witness_e16_4m1_8n3(0, -1)) == -5 * (Int(1) << 16));
}

TEST_CASE("2^18 constructions") {
    CHECK(oracle(gdet::witness_e18_odd(0)) == 262144);
    CHECK(oracle(gdet::witness_e18_odd(-1)) == -262144);
    CHECK(oracle(gdet::witness_e18_odd(1)) == 3 * (Int(1) << 18));
    CHECK(oracle(gdet::witness_e18_even(0)) == 0);
    CHECK(oracle(gdet::witness_e18_even(1)) == Int(1) << 19);
    CHECK(oracle(gdet::witness_e18_even(-2)) == -(Int(1) << 20));
}

TEST_CASE("construction identities over a parameter box") {
    for (int m = -10; m <= 10; ++m) {
        CHECK(oracle(gdet::witness_odd(m)) == 16 * Int(m) + 1);
        CHECK(oracle(gdet::witness_e16_4m1(m)) == (Int(1) << 16) * (4 * Int(m) + 1));
        CHECK(oracle(gdet::witness_e18_odd(m)) == (Int(1) << 18) * (2 * Int(m) + 1));
        CHECK(oracle(gdet::witness_e18_even(m)) == (Int(1) << 18) * (2 * Int(m)));
        for (int n = -4; n <= 4; ++n)
            CHECK(oracle(gdet::witness_e16_4m1_8n3(m, n)) ==
                  (Int(1) << 16) * (4 * Int(m) + 1) * (8 * Int(n) + 3));
    }
}

TEST_CASE("witness for 2^16 p (4m-1)") {
    CHECK(oracle(gdet::witness_pprime(17, 0)) == -17 * (Int(1) << 16));
    CHECK(oracle(gdet::witness_pprime(17, 1)) == 3 * 17 * (Int(1) << 16));
    CHECK(oracle(gdet::witness_pprime(73, 0)) == -73 * (Int(1) << 16));

    CHECK_THROWS_AS(gdet::witness_pprime(41, 0), std::domain_error);  // a+b = 1 (mod 8)
    CHECK_THROWS_AS(gdet::witness_pprime(13, 0), std::domain_error);  // 5 (mod 8)
    CHECK_THROWS_AS(gdet::witness_pprime(15, 0), std::domain_error);  // composite
}

TEST_CASE("witness for 2^17 p (2m+1)") {
    CHECK(oracle(gdet::witness_p5(5, 0)) == 5 * (Int(1) << 17));
    CHECK(oracle(gdet::witness_p5(13, 0)) == 13 * (Int(1) << 17));
    CHECK(oracle(gdet::witness_p5(5, -1)) == -5 * (Int(1) << 17));

    CHECK_THROWS_AS(gdet::witness_p5(17, 0), std::domain_error);  // 1 (mod 8)
    CHECK_THROWS_AS(gdet::witness_p5(7, 0), std::domain_error);   // 7 (mod 8)
    CHECK_THROWS_AS(gdet::witness_p5(25, 0), std::domain_error);  // composite
}

TEST_CASE("prime-parameter witnesses across small primes") {
    for (std::uint32_t p : gdet::small_primes()) {
        if (p >= 500) break;
        if (p % 8 == 5)
            for (int m : {-2, 0, 3})
                CHECK(oracle(gdet::witness_p5(p, m)) == (Int(1) << 17) * p * (2 * Int(m) + 1));
        if (p % 8 == 1 && gdet::classify_prime(p) == gdet::PrimeClass::P1_prime)
            for (int m : {-2, 0, 3})
                CHECK(oracle(gdet::witness_pprime(p, m)) ==
                      (Int(1) << 16) * p * (4 * Int(m) - 1));
    }
}

TEST_CASE("synthesize dispatches and verifies") {
    auto w = gdet::synthesize(17);
    CHECK(w.verified);
    CHECK(w.family == Family::Odd16m1);
    CoeffVec16 expect;
    expect.fill(1);
    expect[0] = 2;
    CHECK(w.coeffs == expect);

    w = gdet::synthesize((Int(1) << 16) * 15);  // A-branch: 15 = 5 * 3
    CHECK(w.verified);
    CHECK(w.family == Family::E16_A);
    CHECK(oracle(w.coeffs) == (Int(1) << 16) * 15);

    w = gdet::synthesize((Int(1) << 17) * 5 * 7);  // p = 5, 2m+1 = 7
    CHECK(w.verified);
    CHECK(w.family == Family::E17_P5);

    w = gdet::synthesize((Int(1) << 16) * -17);  // B-branch
    CHECK(w.verified);
    CHECK(w.family == Family::E16_B);

    w = gdet::synthesize(0);
    CHECK(w.verified);
    CHECK(w.family == Family::Zero);

    CHECK_THROWS_AS(gdet::synthesize((Int(1) << 16) * 7), gdet::NonMemberError);
    CHECK_THROWS_AS(gdet::synthesize(9), gdet::NonMemberError);
    try {
        gdet::synthesize(9);
    } catch (const gdet::NonMemberError& e) {
        CHECK(e.classification.family == Family::NonMember);
        CHECK(!e.classification.reason.empty());
    }
}

TEST_CASE("synthesized witnesses round-trip across every family") {
    gdet::SplitMix64 rng(401);
    int family_seen[32] = {};
    auto roundtrip = [&](const Int& v) {
        const auto w = gdet::synthesize(v);
        CHECK(w.verified);
        CHECK(w.target == v);
        CHECK(oracle(w.coeffs) == v);
        CHECK(w.family == gdet::classify_c4c2c2(v).family);
        ++family_seen[int(w.family)];
    };
    for (int i = 0; i < 60; ++i) {
        roundtrip(16 * Int(rng.next_in(-100000, 100000)) + 1);
        roundtrip((Int(1) << 16) * (4 * Int(rng.next_in(-5000, 5000)) + 1));
        roundtrip((Int(1) << 16) * (8 * Int(rng.next_in(-5000, 5000)) + 3));
        roundtrip((Int(1) << 16) * (8 * Int(rng.next_in(-40, 40)) - 3) *
                  (8 * Int(rng.next_in(-40, 40)) + 3));
        roundtrip((Int(1) << 16) * -Int(17));
        roundtrip((Int(1) << 17) * 13 * (2 * Int(rng.next_in(-400, 400)) + 1));
        roundtrip((Int(1) << 18) * Int(rng.next_in(-100000, 100000)));
    }
    CHECK(family_seen[int(Family::Odd16m1)] > 0);
    CHECK(family_seen[int(Family::E16_4m1)] > 0);
    CHECK(family_seen[int(Family::E16_8m3)] > 0);
    CHECK(family_seen[int(Family::E16_A)] > 0);
    CHECK(family_seen[int(Family::E16_B)] > 0);
    CHECK(family_seen[int(Family::E17_P5)] > 0);
    CHECK(family_seen[int(Family::E18_any)] > 0);
}

TEST_SUITE_END();
