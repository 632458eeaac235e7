#include "tesler/linalg.hpp"

#include <cstddef>

namespace tesler {

RatMat RatMat::identity(std::size_t k) {
    RatMat m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
    return m;
}

bool RatMat::operator==(const RatMat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != o.a[i]) return false;
    return true;
}

bool RatMat::is_symmetric() const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i + 1; j < cols; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RatMat mat_mul(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw Error("mat_mul: shape mismatch");
    RatMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

RatMat mat_invert(const RatMat& m) {
    if (m.rows != m.cols) throw Error("mat_invert: not square");
    const std::size_t k = m.rows;
    RatMat work = m;
    RatMat inv = RatMat::identity(k);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && work(piv, col) == 0) ++piv;
        if (piv == k) throw SingularMatrix("mat_invert: singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < k; ++j) {
                std::swap(work(col, j), work(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        }
        Rat p = work(col, col);
        for (std::size_t j = 0; j < k; ++j) {
            work(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || work(r, col) == 0) continue;
            Rat f = work(r, col);
            for (std::size_t j = 0; j < k; ++j) {
                work(r, j) -= f * work(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rat det(RatMat m) {
    if (m.rows != m.cols) throw Error("det: not square");
    const std::size_t k = m.rows;
    Rat result = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && m(piv, col) == 0) ++piv;
        if (piv == k) return Rat(0);
        if (piv != col) {
            for (std::size_t j = col; j < k; ++j) std::swap(m(col, j), m(piv, j));
            result = -result;
        }
        result *= m(col, col);
        for (std::size_t r = col + 1; r < k; ++r) {
            if (m(r, col) == 0) continue;
            Rat f = m(r, col) / m(col, col);
            for (std::size_t j = col; j < k; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return result;
}

RatVec solve(const RatMat& a, const RatVec& b) {
    if (b.size() != a.rows) throw Error("solve: rhs length mismatch");
    const std::size_t m = a.rows, n = a.cols;
    RatMat aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = row;
        while (piv < m && aug(piv, col) == 0) ++piv;
        if (piv == m) throw RankDeficient("solve: rank-deficient matrix");
        if (piv != row)
            for (std::size_t j = col; j <= n; ++j) std::swap(aug(row, j), aug(piv, j));
        Rat p = aug(row, col);
        for (std::size_t j = col; j <= n; ++j) aug(row, j) /= p;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || aug(r, col) == 0) continue;
            Rat f = aug(r, col);
            for (std::size_t j = col; j <= n; ++j) aug(r, j) -= f * aug(row, j);
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (aug(r, n) != 0) throw InconsistentSystem("solve: inconsistent system");
    RatVec x(n);
    for (std::size_t col = 0; col < n; ++col) x[col] = aug(pivot_row[col], n);
    return x;
}

RatMat gram(const std::vector<RatVec>& vectors) {
    const std::size_t k = vectors.size();
    RatMat g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Rat d = dot(vectors[i], vectors[j]);
            g(i, j) = d;
            if (i != j) g(j, i) = d;
        }
    return g;
}

RatVec lagrange_interpolate(const std::vector<std::pair<Int, Rat>>& points) {
    const std::size_t k = points.size();
    if (k == 0) throw Error("lagrange_interpolate: no points");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (points[i].first == points[j].first)
                throw DuplicateAbscissa("lagrange_interpolate: duplicate abscissa");
    RatVec coeffs(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        // Basis numerator prod_{j != i} (x - t_j), built as a coefficient list.
        RatVec basis(k, Rat(0));
        basis[0] = 1;
        std::size_t deg = 0;
        Rat denom = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            Rat tj(points[j].first);
            for (std::size_t c = deg + 1; c > 0; --c)
                basis[c] = basis[c - 1] - tj * basis[c];
            basis[0] = -tj * basis[0];
            ++deg;
            denom *= Rat(points[i].first) - tj;
        }
        Rat scale = points[i].second / denom;
        for (std::size_t c = 0; c < k; ++c) coeffs[c] += scale * basis[c];
    }
    return coeffs;
}

Rat poly_eval(const RatVec& coeffs, const Rat& t) {
    Rat acc = 0;
    for (std::size_t c = coeffs.size(); c > 0; --c) acc = acc * t + coeffs[c - 1];
    return acc;
}

}  // namespace tesler
