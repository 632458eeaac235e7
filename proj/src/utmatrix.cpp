#include "tesler/utmatrix.hpp"

#include <cstddef>

namespace tesler {

namespace {

std::size_t index_of(int n, int i, int j) {
    // Row i starts after rows 1..i-1, which hold (n) + (n-1) + ... entries.
    std::size_t start = static_cast<std::size_t>(i - 1) * (2 * n - i + 2) / 2;
    return start + static_cast<std::size_t>(j - i);
}

void check_pos(int n, int i, int j) {
    if (i < 1 || j < i || j > n) throw Error("UTMatrix: position out of range");
}

}  // namespace

std::string pos_str(const Pos& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

UTMatrix::UTMatrix(int n) : n_(n), e_(entry_count(n)) {
    if (n < 0) throw Error("UTMatrix: negative size");
}

std::size_t UTMatrix::entry_count(int n) {
    return static_cast<std::size_t>(n) * (n + 1) / 2;
}

Rat& UTMatrix::at(int i, int j) {
    check_pos(n_, i, j);
    return e_[index_of(n_, i, j)];
}

const Rat& UTMatrix::at(int i, int j) const {
    check_pos(n_, i, j);
    return e_[index_of(n_, i, j)];
}

std::vector<Pos> UTMatrix::positions(int n) {
    std::vector<Pos> out;
    out.reserve(entry_count(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.push_back({i, j});
    return out;
}

RatVec hook_sum(const UTMatrix& m) {
    const int n = m.size();
    RatVec h(n, Rat(0));
    for (int k = 1; k <= n; ++k) {
        for (int j = k; j <= n; ++j) h[k - 1] += m.at(k, j);
        for (int i = 1; i < k; ++i) h[k - 1] -= m.at(i, k);
    }
    return h;
}

UTMatrix interior_point(const RatVec& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw Error("interior_point: empty hook sums");
    if (a[0] <= 0) throw NonPositiveFirstEntry("interior_point: first hook sum must be positive");
    // Constant rows: row k takes the value c_k in positions k..n. Each c_k
    // is positive as soon as a_1 > 0 and the rest of a is nonnegative.
    RatVec c(n);
    Rat prefix = 0;
    for (int k = 1; k <= n; ++k) {
        c[k - 1] = (prefix + a[k - 1]) / Rat(n - k + 1);
        prefix += c[k - 1];
    }
    UTMatrix m(n);
    for (int k = 1; k <= n; ++k)
        for (int j = k; j <= n; ++j) m.at(k, j) = c[k - 1];
    return m;
}

UTMatrix psi_diag(const UTMatrix& m) {
    const int n = m.size();
    if (n < 2) throw Error("psi_diag: size must be at least 2");
    UTMatrix y(n - 1);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) y.at(i, j) = m.at(i, j + 1);
    return y;
}

UTMatrix lift_psi_diag(const UTMatrix& y, const RatVec& a) {
    const int n = y.size() + 1;
    if (a.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("lift_psi_diag: hook sum length mismatch");
    UTMatrix m(n);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) m.at(i, j + 1) = y.at(i, j);
    for (int k = 1; k <= n; ++k) {
        Rat diag = a[k - 1];
        for (int i = 1; i < k; ++i) diag += m.at(i, k);
        for (int j = k + 1; j <= n; ++j) diag -= m.at(k, j);
        m.at(k, k) = diag;
    }
    return m;
}

bool is_strictly_positive(const RatVec& a) {
    for (const Rat& x : a)
        if (x <= 0) return false;
    return !a.empty();
}

std::size_t trim_leading_zeros(RatVec& a) {
    std::size_t p = 0;
    while (p < a.size() && a[p] == 0) ++p;
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(p));
    return p;
}

void require_strictly_positive(const RatVec& a) {
    if (!is_strictly_positive(a))
        throw NonPositiveHookSum("hook sums must be strictly positive");
}

}  // namespace tesler
