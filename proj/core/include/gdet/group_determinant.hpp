#pragma once

#include <array>
#include <span>
#include <vector>

#include "gdet/int.hpp"

namespace gdet {

// Coefficient vector indexed by the sixteen elements of C4 x C2 x C2.
// Index j = r + 4s + 8t encodes the element (r mod 4, s mod 2, t mod 2);
// the encoding is bijective on 0..15. Every file and CLI format of this
// project uses this index order.
using CoeffVec16 = std::array<Int, 16>;

// Argument of the order-4 circulant determinant.
using QuadVec = std::array<Int, 4>;

// Linear change of variables splitting the 16-variable determinant into
// four order-4 circulant factors:
//   b_i = (a_i + a_{i+8}) + (a_{i+4} + a_{i+12})
//   c_i = (a_i + a_{i+8}) - (a_{i+4} + a_{i+12})
//   d_i = (a_i - a_{i+8}) + (a_{i+4} - a_{i+12})
//   e_i = (a_i - a_{i+8}) - (a_{i+4} - a_{i+12})
// The map is injective and linear; for every i,
//   b_i = c_i = d_i = e_i (mod 2)  and  b_i + c_i + d_i + e_i = 4 a_i.
struct BcdeTransform {
    QuadVec b, c, d, e;
};

// Group element arithmetic on encoded indices.
constexpr int element_index(int r, int s, int t) { return (r & 3) + 4 * (s & 1) + 8 * (t & 1); }
constexpr int element_mul(int i, int j) {
    return element_index(((i & 3) + (j & 3)) & 3, (i >> 2) ^ (j >> 2), (i >> 3) ^ (j >> 3));
}
constexpr int element_inv(int i) { return element_index(-(i & 3) & 3, (i >> 2) & 1, (i >> 3) & 1); }

// Order-4 circulant determinant,
//   det_c4(x) = {(x0+x2)^2 - (x1+x3)^2} * {(x0-x2)^2 + (x1-x3)^2}.
// Satisfies det_c4(x0,x1,x2,x3) = -det_c4(x1,x2,x3,x0) and
// det_c4(x) = x0+x1+x2+x3 (mod 2).
Int det_c4(const QuadVec& x);

BcdeTransform bcde_transform(const CoeffVec16& a);

// Determinant over C4 x C2 (y has exactly 8 entries, index j = r + 4s):
//   det_c4(y0+y4, y1+y5, y2+y6, y3+y7) * det_c4(y0-y4, y1-y5, y2-y6, y3-y7).
// Throws std::invalid_argument unless y.size() == 8.
Int det_c4c2(std::span<const Int> y);

// Determinant over C4 x C2 x C2 through the b/c/d/e split:
//   det_c4(b) * det_c4(c) * det_c4(d) * det_c4(e).
Int det_c4c2c2(const CoeffVec16& a);

// Exact determinant of an n x n integer matrix by fraction-free (Bareiss)
// elimination with row pivoting; returns 0 as soon as a column has no
// nonzero pivot. Consumes its argument.
Int bareiss_determinant(std::vector<std::vector<Int>> m);

// Matrix route: build (x_{g h^-1})_{g,h in G} entrywise with the group
// arithmetic above and run fraction-free elimination. Independent of the
// closed-form factorizations, which it exists to cross-check; agrees with
// them on every input.
Int det_c4_matrix(const QuadVec& x);
Int det_c4c2_matrix(std::span<const Int> y);  // throws unless y.size() == 8
Int det_c4c2c2_matrix(const CoeffVec16& a);

}  // namespace gdet
