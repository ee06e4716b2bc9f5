#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "gdet/group_determinant.hpp"
#include "gdet/rng.hpp"

using gdet::CoeffVec16;
using gdet::Int;
using gdet::QuadVec;

namespace {

// cofactor-expansion determinant, test-only reference for small matrices
Int laplace_det(const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Int total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0) continue;
        std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        const Int term = m[0][col] * laplace_det(minor);
        total += (col % 2 == 0) ? term : -term;
    }
    return total;
}

std::vector<std::vector<Int>> circulant4(const QuadVec& x) {
    std::vector<std::vector<Int>> m(4, std::vector<Int>(4));
    for (int g = 0; g < 4; ++g)
        for (int h = 0; h < 4; ++h) m[g][h] = x[(g - h + 4) & 3];
    return m;
}

CoeffVec16 random_vec(gdet::SplitMix64& rng, int bound) {
    CoeffVec16 a;
    for (auto& x : a) x = rng.next_in(-bound, bound);
    return a;
}

QuadVec random_quad(gdet::SplitMix64& rng, int bound) {
    QuadVec q;
    for (auto& x : q) x = rng.next_in(-bound, bound);
    return q;
}

}  // namespace

TEST_SUITE_BEGIN("group_determinant");

TEST_CASE("det_c4 closed form on known arguments") {
    CHECK(gdet::det_c4({1, 0, 0, 0}) == 1);
    CHECK(gdet::det_c4({1, 1, 2, 0}) == 16);
    CHECK(gdet::det_c4({3, 1, 2, 2}) == 32);
    CHECK(gdet::det_c4({1, 1, 0, 2}) == -16);
    CHECK(gdet::det_c4({1, -1, 2, 0}) == 16);
    CHECK(gdet::det_c4({0, 1, 1, 1}) == -3);
    CHECK(gdet::det_c4({1, 0, 2, 0}) == 9);
}

TEST_CASE("det_c4 agrees with the 4x4 circulant by two independent routes") {
    gdet::SplitMix64 rng(101);
    for (int i = 0; i < 500; ++i) {
        const QuadVec q = random_quad(rng, 9);
        const Int closed = gdet::det_c4(q);
        CHECK(closed == gdet::det_c4_matrix(q));
        CHECK(closed == laplace_det(circulant4(q)));
    }
}

TEST_CASE("cyclic antisymmetry and parity of det_c4") {
    gdet::SplitMix64 rng(102);
    for (int i = 0; i < 2000; ++i) {
        const QuadVec q = random_quad(rng, 50);
        CHECK(gdet::det_c4(q) == -gdet::det_c4({q[1], q[2], q[3], q[0]}));
        const Int sum = q[0] + q[1] + q[2] + q[3];
        CHECK(gdet::mod_floor(gdet::det_c4(q), 2) == gdet::mod_floor(sum, 2));
    }
}

TEST_CASE("bcde transform on degenerate inputs") {
    CoeffVec16 a{};
    a[0] = 1;
    auto t = gdet::bcde_transform(a);
    const QuadVec delta{1, 0, 0, 0};
    CHECK(t.b == delta);
    CHECK(t.c == delta);
    CHECK(t.d == delta);
    CHECK(t.e == delta);

    CoeffVec16 a4{};
    a4[4] = 1;
    t = gdet::bcde_transform(a4);
    CHECK(t.b == QuadVec{1, 0, 0, 0});
    CHECK(t.c == QuadVec{-1, 0, 0, 0});
    CHECK(t.d == QuadVec{1, 0, 0, 0});
    CHECK(t.e == QuadVec{-1, 0, 0, 0});

    CoeffVec16 constant;
    constant.fill(7);
    t = gdet::bcde_transform(constant);
    CHECK(t.b == QuadVec{28, 28, 28, 28});
    CHECK(t.c == QuadVec{0, 0, 0, 0});
    CHECK(t.d == QuadVec{0, 0, 0, 0});
    CHECK(t.e == QuadVec{0, 0, 0, 0});
}

TEST_CASE("bcde transform invariants and invertibility") {
    gdet::SplitMix64 rng(103);
    for (int i = 0; i < 1000; ++i) {
        const CoeffVec16 a = random_vec(rng, 100);
        const auto t = gdet::bcde_transform(a);
        CoeffVec16 back;
        for (int j = 0; j < 4; ++j) {
            const Int &b = t.b[j], &c = t.c[j], &d = t.d[j], &e = t.e[j];
            const int parity = gdet::residue(b, 2);
            CHECK(gdet::residue(c, 2) == parity);
            CHECK(gdet::residue(d, 2) == parity);
            CHECK(gdet::residue(e, 2) == parity);
            CHECK(b + c + d + e == 4 * a[j]);
            back[j] = (b + c + d + e) / 4;
            back[j + 4] = (b - c + d - e) / 4;
            back[j + 8] = (b + c - d - e) / 4;
            back[j + 12] = (b - c - d + e) / 4;
        }
        CHECK(back == a);  // linear and injective
    }
}

TEST_CASE("det_c4c2 factorization and length check") {
    const std::vector<Int> identity{1, 0, 0, 0, 0, 0, 0, 0};
    CHECK(gdet::det_c4c2(identity) == 1);
    const std::vector<Int> doubled{1, 1, 2, 0, 0, 0, 0, 0};
    CHECK(gdet::det_c4c2(doubled) == 256);
    CHECK(gdet::det_c4c2(doubled) == gdet::det_c4c2_matrix(doubled));
    const std::vector<Int> annihilated{1, 0, 0, 0, 1, 0, 0, 0};
    CHECK(gdet::det_c4c2(annihilated) == 0);

    const std::vector<Int> wrong{1, 2, 3};
    CHECK_THROWS_AS(gdet::det_c4c2(wrong), std::invalid_argument);
    CHECK_THROWS_AS(gdet::det_c4c2_matrix(wrong), std::invalid_argument);
}

TEST_CASE("det_c4c2 matches the 8x8 group matrix route on random input") {
    gdet::SplitMix64 rng(104);
    for (int i = 0; i < 300; ++i) {
        std::vector<Int> y(8);
        for (auto& v : y) v = rng.next_in(-9, 9);
        CHECK(gdet::det_c4c2(y) == gdet::det_c4c2_matrix(y));
    }
}

TEST_CASE("det_c4c2c2 on known vectors") {
    CoeffVec16 identity{};
    identity[0] = 1;
    CHECK(gdet::det_c4c2c2(identity) == 1);
    CHECK(gdet::det_c4c2c2_matrix(identity) == 1);

    CoeffVec16 a;
    a.fill(1);
    a[0] = 2;
    CHECK(gdet::det_c4c2c2(a) == 17);
    CHECK(gdet::det_c4c2c2_matrix(a) == 17);

    CoeffVec16 b{};
    b[0] = 1;
    b[1] = 1;
    b[2] = 2;
    CHECK(gdet::det_c4c2c2(b) == 65536);

    CoeffVec16 zeros{};
    CHECK(gdet::det_c4c2c2(zeros) == 0);
    CHECK(gdet::det_c4c2c2_matrix(zeros) == 0);
}

TEST_CASE("factorized and matrix routes agree on random vectors") {
    gdet::SplitMix64 rng(105);
    for (int i = 0; i < 1500; ++i) {
        const CoeffVec16 a = random_vec(rng, 9);
        CHECK(gdet::det_c4c2c2(a) == gdet::det_c4c2c2_matrix(a));
    }
}

TEST_CASE("the 16-variable determinant splits through the 8-variable one") {
    gdet::SplitMix64 rng(109);
    for (int i = 0; i < 400; ++i) {
        const CoeffVec16 a = random_vec(rng, 9);
        std::vector<Int> hsum(8), hdiff(8);
        for (int j = 0; j < 8; ++j) {
            hsum[j] = a[j] + a[j + 8];
            hdiff[j] = a[j] - a[j + 8];
        }
        CHECK(gdet::det_c4c2c2(a) == gdet::det_c4c2(hsum) * gdet::det_c4c2(hdiff));
    }
}

TEST_CASE("parity: the full determinant matches each factor determinant mod 2") {
    gdet::SplitMix64 rng(106);
    for (int i = 0; i < 800; ++i) {
        const CoeffVec16 a = random_vec(rng, 20);
        const auto t = gdet::bcde_transform(a);
        const Int full = gdet::det_c4c2c2(a);
        const int parity = gdet::residue(full, 2);
        for (const QuadVec* q : {&t.b, &t.c, &t.d, &t.e})
            CHECK(gdet::residue(gdet::det_c4(*q), 2) == parity);
    }
}

TEST_CASE("scaling all coefficients scales the determinant by t^16") {
    gdet::SplitMix64 rng(107);
    for (int i = 0; i < 200; ++i) {
        const CoeffVec16 a = random_vec(rng, 5);
        const Int t = rng.next_in(-3, 3);
        CoeffVec16 scaled;
        for (int j = 0; j < 16; ++j) scaled[j] = a[j] * t;
        Int t16 = 1;
        for (int j = 0; j < 16; ++j) t16 *= t;
        CHECK(gdet::det_c4c2c2(scaled) == t16 * gdet::det_c4c2c2(a));
    }
}

TEST_CASE("bareiss_determinant fundamentals") {
    CHECK(gdet::bareiss_determinant({{Int(5)}}) == 5);
    CHECK(gdet::bareiss_determinant({{1, 2}, {3, 4}}) == -2);
    // singular: second row is twice the first
    CHECK(gdet::bareiss_determinant({{1, 2, 3}, {2, 4, 6}, {7, 8, 9}}) == 0);
    // zero leading pivot forces a row swap
    CHECK(gdet::bareiss_determinant({{0, 1}, {1, 0}}) == -1);
    CHECK_THROWS_AS(gdet::bareiss_determinant({{1, 2}, {3}}), std::invalid_argument);

    gdet::SplitMix64 rng(108);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 5 + rep % 2;
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
        for (auto& row : m)
            for (auto& x : row) x = rng.next_in(-5, 5);
        CHECK(gdet::bareiss_determinant(m) == laplace_det(m));
    }
}

TEST_CASE("group element indexing is a bijective encoding") {
    bool seen[16] = {};
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t) {
                const int j = gdet::element_index(r, s, t);
                CHECK(0 <= j);
                CHECK(j < 16);
                CHECK(!seen[j]);
                seen[j] = true;
            }
    for (int i = 0; i < 16; ++i) {
        CHECK(gdet::element_mul(i, gdet::element_inv(i)) == 0);
        CHECK(gdet::element_mul(0, i) == i);
        for (int j = 0; j < 16; ++j)
            CHECK(gdet::element_mul(i, j) == gdet::element_mul(j, i));
    }
}

TEST_SUITE_END();
