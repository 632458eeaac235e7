#include "tesler/ehrhart.hpp"

#include <map>
#include <string>
#include <utility>

#include "tesler/alpha.hpp"
#include "tesler/errors.hpp"
#include "tesler/parallel.hpp"

namespace tesler {

namespace {

std::vector<long> integral_hooks(int n, const RatVec& a, long t) {
    if (n < 1) throw DimensionMismatch("matrix size must be at least 1");
    if (a.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("expected " + std::to_string(n) + " hook sums, got " +
                                std::to_string(a.size()));
    if (t < 0) throw DimensionMismatch("dilation factor must be non-negative");
    std::vector<long> b(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const Rat& v = a[static_cast<std::size_t>(k)];
        if (v <= 0)
            throw NonPositiveHookSum("hook sum " + std::to_string(k + 1) + " must be positive");
        if (!is_integral(v))
            throw NonIntegralHookSum("hook sum " + std::to_string(k + 1) +
                                     " must be an integer for lattice point counting");
        Int scaled = v.get_num() * t;
        if (!scaled.fits_slong_p()) throw Error("dilated hook sum overflows the counter");
        b[static_cast<std::size_t>(k)] = scaled.get_si();
    }
    return b;
}

// Rows are filled top to bottom.  The carry vector holds, for each column
// from the current row onward, what earlier rows already dropped into it;
// the row sum is then pinned to hook + carry and gets distributed over the
// row's live positions, the diagonal absorbing any remainder.
struct Counter {
    int n = 0;
    std::vector<long> b;
    std::vector<std::vector<char>> dead;
    std::map<std::pair<int, std::vector<long>>, Int> memo;

    Int rows_from(int k, const std::vector<long>& carry) {
        if (k > n) return 1;
        const long s = b[static_cast<std::size_t>(k - 1)] + carry[0];
        if (s < 0) return 0;
        auto key = std::make_pair(k, carry);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<long> next(carry.begin() + 1, carry.end());
        Int acc = 0;
        spread(k, k + 1, s, next, acc);
        memo.emplace(std::move(key), acc);
        return acc;
    }

    void spread(int k, int j, long left, std::vector<long>& next, Int& acc) {
        if (j > n) {
            if (left == 0 || !dead[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)])
                acc += rows_from(k + 1, next);
            return;
        }
        if (dead[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)]) {
            spread(k, j + 1, left, next, acc);
            return;
        }
        long& slot = next[static_cast<std::size_t>(j - k - 1)];
        const long base = slot;
        for (long v = 0; v <= left; ++v) {
            slot = base + v;
            spread(k, j + 1, left - v, next, acc);
        }
        slot = base;
    }
};

}  // namespace

Int count_points(int n, const RatVec& a, long t, const FaceSupport& support) {
    if (support.n != n) throw DimensionMismatch("support size disagrees with the matrix size");
    if (!is_valid_face_support(n, support.s))
        throw InvalidFacet("support does not cut out a face: " + support_str(support));
    Counter c;
    c.n = n;
    c.b = integral_hooks(n, a, t);
    c.dead.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const Pos& p : support.s)
        c.dead[static_cast<std::size_t>(p.i - 1)][static_cast<std::size_t>(p.j - 1)] = 1;
    return c.rows_from(1, std::vector<long>(static_cast<std::size_t>(n), 0));
}

Int count_points(int n, const RatVec& a, long t) {
    return count_points(n, a, t, FaceSupport(n, {}));
}

EhrhartPoly face_ehrhart(int n, const RatVec& a, const FaceSupport& support) {
    const int d = n * (n - 1) / 2 - support.codim();
    std::vector<std::pair<Int, Rat>> pts;
    pts.reserve(static_cast<std::size_t>(d) + 1);
    for (long t = 0; t <= d; ++t) pts.emplace_back(Int(t), Rat(count_points(n, a, t, support)));
    EhrhartPoly poly{n, a, support, lagrange_interpolate(pts)};
    for (long t = d + 1; t <= d + 2; ++t)
        if (poly_eval(poly.coeffs, Rat(t)) != Rat(count_points(n, a, t, support)))
            throw InterpolationMismatch("count at dilate " + std::to_string(t) +
                                        " leaves the interpolated polynomial");
    return poly;
}

EhrhartPoly ehrhart_poly(int n, const RatVec& a) {
    return face_ehrhart(n, a, FaceSupport(n, {}));
}

Rat face_nvol(int n, const RatVec& a, const FaceSupport& support) {
    return face_ehrhart(n, a, support).leading();
}

Rat mcmullen_coefficient(int n, const RatVec& a, int dim, int jobs) {
    const int d = n * (n - 1) / 2;
    if (dim < 0 || dim > d)
        throw DimensionMismatch("no faces of dimension " + std::to_string(dim));
    const int codim = d - dim;
    if (codim > 3)
        throw UnsupportedCodim("alpha values reach only three levels below the top dimension");
    const std::vector<FaceSupport> faces = enumerate_faces(n, codim);
    RatVec terms(faces.size());
    parallel_for(faces.size(), jobs, [&](std::size_t i) {
        terms[i] = alpha_of_face(n, faces[i]).value * face_nvol(n, a, faces[i]);
    });
    Rat total = 0;
    for (const Rat& v : terms) total += v;
    return total;
}

McMullenReport mcmullen_check(int n, const RatVec& a, int jobs) {
    McMullenReport rep;
    rep.n = n;
    rep.a = a;
    const EhrhartPoly full = ehrhart_poly(n, a);
    rep.ehrhart = full.coeffs;
    for (int dim = full.dim(); dim >= 0 && full.dim() - dim <= 3; --dim) {
        McMullenTerm term;
        term.dim = dim;
        term.coeff = full.coeffs[static_cast<std::size_t>(dim)];
        term.weighted = mcmullen_coefficient(n, a, dim, jobs);
        term.match = term.coeff == term.weighted;
        rep.terms.push_back(term);
    }
    return rep;
}

}  // namespace tesler
