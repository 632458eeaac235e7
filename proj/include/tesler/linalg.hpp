#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tesler/rational.hpp"

namespace tesler {

// Dense rational matrix, row-major.
struct RatMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    RatVec a;

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    static RatMat identity(std::size_t k);

    Rat& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool operator==(const RatMat& o) const;
    bool operator!=(const RatMat& o) const { return !(*this == o); }

    bool is_symmetric() const;
};

RatMat mat_mul(const RatMat& x, const RatMat& y);

// Exact Gauss-Jordan elimination, pivoting on the first nonzero entry.
// Throws SingularMatrix.
RatMat mat_invert(const RatMat& m);

Rat det(RatMat m);

// Solves A x = b for A with full column rank. Throws RankDeficient when a
// column has no pivot, InconsistentSystem when elimination leaves a row
// 0 = c with c nonzero.
RatVec solve(const RatMat& a, const RatVec& b);

// Pairwise dot products; vectors must share a common length.
RatMat gram(const std::vector<RatVec>& vectors);

// Coefficients c_0..c_{k-1} (ascending) of the unique polynomial of degree
// < k through the k points. Throws DuplicateAbscissa.
RatVec lagrange_interpolate(const std::vector<std::pair<Int, Rat>>& points);

Rat poly_eval(const RatVec& coeffs, const Rat& t);

}  // namespace tesler
