#include "tesler/cones.hpp"

#include <algorithm>
#include <cstddef>

namespace tesler {

namespace {

void require_valid(int n, const FaceSupport& s) {
    if (s.n != n) throw DimensionMismatch("face support size mismatch");
    if (!is_valid_face_support(n, s.s)) throw InvalidFacet("not a face support: " + support_str(s));
}

RatVec projected_direction(int n, const RatVec& a, const std::vector<int>& f, int row, int col) {
    // Edge direction from the vertex f toward the vertex with row's free
    // column moved to col, in the projected coordinates, made primitive.
    std::vector<int> g = f;
    g[row - 1] = col;
    const RatVec from = psi_diag(vertex_from_free_cols(n, a, f)).flat();
    const RatVec to = psi_diag(vertex_from_free_cols(n, a, g)).flat();
    std::vector<Int> diff(from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
        Rat d = to[c] - from[c];
        if (!is_integral(d)) throw Error("edge direction not integral");
        diff[c] = d.get_num();
    }
    diff = primitive_vector(diff);
    RatVec out(diff.size());
    for (std::size_t c = 0; c < diff.size(); ++c) out[c] = Rat(diff[c]);
    return out;
}

}  // namespace

Mdp ncone_mdp(int n, const FaceSupport& s) {
    require_valid(n, s);
    std::vector<RatVec> normals;
    normals.reserve(s.s.size());
    for (const Pos& p : s.s) normals.push_back(facet_normal(n, p).flat());
    return Mdp{ConeKind::Normal, gram(normals)};
}

Mdp fcone_mdp(int n, const FaceSupport& s) {
    Mdp c = ncone_mdp(n, s);
    return Mdp{ConeKind::Feasible, mat_invert(c.m)};
}

std::vector<std::vector<int>> face_vertex_tuples(int n, const FaceSupport& s) {
    require_valid(n, s);
    std::vector<std::vector<int>> out;
    std::vector<int> f(static_cast<std::size_t>(n - 1));
    auto rec = [&](auto&& self, int row) -> void {
        if (row == n) {
            out.push_back(f);
            return;
        }
        for (int col = row; col <= n; ++col) {
            if (s.contains(Pos{row, col})) continue;
            f[row - 1] = col;
            self(self, row + 1);
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    if (out.empty()) throw NoVertexFound("face has no vertex: " + support_str(s));
    return out;
}

Mdp fcone_mdp_oracle(int n, const FaceSupport& s) {
    require_valid(n, s);
    // Lexicographically smallest vertex support keeps each row's free
    // column as late as possible.
    std::vector<int> f(static_cast<std::size_t>(n - 1));
    for (int row = 1; row <= n - 1; ++row) {
        int pick = -1;
        for (int col = n; col >= row; --col)
            if (!s.contains(Pos{row, col})) {
                pick = col;
                break;
            }
        if (pick < 0) throw NoVertexFound("face has no vertex: " + support_str(s));
        f[row - 1] = pick;
    }
    return fcone_mdp_oracle_at(n, s, f);
}

Mdp fcone_mdp_oracle_at(int n, const FaceSupport& s, const std::vector<int>& f) {
    require_valid(n, s);
    if (f.size() != static_cast<std::size_t>(n - 1))
        throw InfeasibleVertex("oracle: need one free column per row 1..n-1");
    for (int row = 1; row <= n - 1; ++row)
        if (s.contains(Pos{row, f[row - 1]}))
            throw InfeasibleVertex("oracle: base vertex not on the face");
    const RatVec a(static_cast<std::size_t>(n), Rat(1));
    const std::size_t k = s.s.size();

    // Off-face neighbors, one per support position: moving row i's free
    // column onto the vanishing position leaves exactly that facet.
    std::vector<RatVec> off(k);
    for (std::size_t t = 0; t < k; ++t)
        off[t] = projected_direction(n, a, f, s.s[t].i, s.s[t].j);

    // In-face neighbors span the linear hull of the face.
    std::vector<RatVec> span;
    for (int row = 1; row <= n - 1; ++row)
        for (int col = row; col <= n; ++col) {
            if (col == f[row - 1] || s.contains(Pos{row, col})) continue;
            span.push_back(projected_direction(n, a, f, row, col));
        }

    // Orthogonal projection away from the face span, exactly.
    std::vector<RatVec> u = off;
    if (!span.empty()) {
        const std::size_t m = span.front().size();
        RatMat b(m, span.size());
        for (std::size_t c = 0; c < span.size(); ++c)
            for (std::size_t r = 0; r < m; ++r) b(r, c) = span[c][r];
        RatMat btb(span.size(), span.size());
        for (std::size_t p = 0; p < span.size(); ++p)
            for (std::size_t q = 0; q < span.size(); ++q) btb(p, q) = dot(span[p], span[q]);
        for (std::size_t t = 0; t < k; ++t) {
            RatVec rhs(span.size());
            for (std::size_t p = 0; p < span.size(); ++p) rhs[p] = dot(span[p], off[t]);
            RatVec coef = solve(btb, rhs);
            for (std::size_t c = 0; c < span.size(); ++c)
                for (std::size_t r = 0; r < m; ++r) u[t][r] -= coef[c] * span[c][r];
        }
    }

    // The projected directions must pair against the face's own normals as
    // -identity and vanish against nothing else on the face.
    for (std::size_t j = 0; j < k; ++j) {
        const RatVec nj = facet_normal(n, s.s[j]).flat();
        for (std::size_t i = 0; i < k; ++i) {
            const Rat want = (i == j) ? Rat(-1) : Rat(0);
            if (dot(nj, u[i]) != want)
                throw Error("oracle: normal pairing violated at " + support_str(s));
        }
        for (const RatVec& d : span)
            if (dot(nj, d) != 0) throw Error("oracle: face span leaks across a facet");
    }

    return Mdp{ConeKind::Feasible, gram(u)};
}

bool check_vertex_unimodularity(const VertexGraph& g, std::size_t v) {
    if (v >= g.vertices.size()) throw Error("check_vertex_unimodularity: index out of range");
    const int n = g.n;
    const std::vector<int>& f = g.free_cols[v];
    std::vector<RatVec> dirs;
    for (int row = 1; row <= n - 1; ++row)
        for (int col = row; col <= n; ++col) {
            if (col == f[row - 1]) continue;
            dirs.push_back(projected_direction(n, g.a, f, row, col));
        }
    const std::size_t d = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (dirs.size() != d) return false;
    RatMat m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r, c) = dirs[r][c];
    const Rat dm = det(m);
    return dm == 1 || dm == -1;
}

}  // namespace tesler
