#include "gdet/group_determinant.hpp"

#include <stdexcept>
#include <utility>

namespace gdet {

Int det_c4(const QuadVec& x) {
    const Int p = x[0] + x[2];
    const Int q = x[1] + x[3];
    const Int r = x[0] - x[2];
    const Int s = x[1] - x[3];
    return (p * p - q * q) * (r * r + s * s);
}

BcdeTransform bcde_transform(const CoeffVec16& a) {
    BcdeTransform t;
    for (int i = 0; i < 4; ++i) {
        const Int u = a[i] + a[i + 8];
        const Int v = a[i + 4] + a[i + 12];
        const Int w = a[i] - a[i + 8];
        const Int z = a[i + 4] - a[i + 12];
        t.b[i] = u + v;
        t.c[i] = u - v;
        t.d[i] = w + z;
        t.e[i] = w - z;
    }
    return t;
}

Int det_c4c2(std::span<const Int> y) {
    if (y.size() != 8) throw std::invalid_argument("det_c4c2: expected 8 coefficients");
    QuadVec sum, diff;
    for (int i = 0; i < 4; ++i) {
        sum[i] = y[i] + y[i + 4];
        diff[i] = y[i] - y[i + 4];
    }
    return det_c4(sum) * det_c4(diff);
}

Int det_c4c2c2(const CoeffVec16& a) {
    const BcdeTransform t = bcde_transform(a);
    return det_c4(t.b) * det_c4(t.c) * det_c4(t.d) * det_c4(t.e);
}

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix not square");

    Int prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // every entry after step k is a (k+2)-minor of the pivoted
                // input, so this division is exact
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return negate ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

Int det_c4_matrix(const QuadVec& x) {
    std::vector<std::vector<Int>> m(4, std::vector<Int>(4));
    for (int g = 0; g < 4; ++g)
        for (int h = 0; h < 4; ++h) m[g][h] = x[(g - h + 4) & 3];
    return bareiss_determinant(std::move(m));
}

Int det_c4c2_matrix(std::span<const Int> y) {
    if (y.size() != 8) throw std::invalid_argument("det_c4c2_matrix: expected 8 coefficients");
    std::vector<std::vector<Int>> m(8, std::vector<Int>(8));
    for (int g = 0; g < 8; ++g) {
        for (int h = 0; h < 8; ++h) {
            const int r = ((g & 3) - (h & 3) + 4) & 3;
            const int s = (g >> 2) ^ (h >> 2);
            m[g][h] = y[r + 4 * s];
        }
    }
    return bareiss_determinant(std::move(m));
}

Int det_c4c2c2_matrix(const CoeffVec16& a) {
    std::vector<std::vector<Int>> m(16, std::vector<Int>(16));
    for (int g = 0; g < 16; ++g)
        for (int h = 0; h < 16; ++h) m[g][h] = a[element_mul(g, element_inv(h))];
    return bareiss_determinant(std::move(m));
}

}  // namespace gdet
