#include "tesler/vertices.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>

namespace tesler {

std::vector<std::vector<std::size_t>> VertexGraph::neighbors() const {
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

UTMatrix vertex_from_free_cols(int n, const RatVec& a, const std::vector<int>& f) {
    if (a.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("vertex_from_free_cols: hook sum length mismatch");
    if (f.size() != static_cast<std::size_t>(n - 1))
        throw InfeasibleVertex("vertex_from_free_cols: need one free column per row 1..n-1");
    for (int i = 1; i <= n - 1; ++i)
        if (f[i - 1] < i || f[i - 1] > n)
            throw InfeasibleVertex("vertex_from_free_cols: free column out of range in row " +
                                   std::to_string(i));
    UTMatrix m(n);
    // Row i carries its whole hook sum in the free position, fed by the
    // free entries of earlier rows that point into column i.
    for (int i = 1; i <= n - 1; ++i) {
        Rat v = a[i - 1];
        for (int k = 1; k < i; ++k)
            if (f[k - 1] == i) v += m.at(k, i);
        m.at(i, f[i - 1]) = v;
    }
    Rat last = a[n - 1];
    for (int k = 1; k < n; ++k)
        if (f[k - 1] == n) last += m.at(k, n);
    m.at(n, n) = last;
    return m;
}

FaceSupport support_from_free_cols(int n, const std::vector<int>& f) {
    std::vector<Pos> s;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n; ++j)
            if (j != f[i - 1]) s.push_back({i, j});
    return FaceSupport(n, std::move(s));
}

VertexGraph enumerate_vertices(int n, const RatVec& a) {
    if (n < 1) throw Error("enumerate_vertices: size must be at least 1");
    require_strictly_positive(a);
    if (a.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("enumerate_vertices: hook sum length mismatch");
    VertexGraph g;
    g.n = n;
    g.a = a;
    std::vector<std::vector<int>> tuples;
    std::vector<int> f(n - 1);
    for (int i = 1; i <= n - 1; ++i) f[i - 1] = i;
    while (true) {
        tuples.push_back(f);
        int i = n - 2;
        while (i >= 0 && f[i] == n) --i;
        if (i < 0) break;
        ++f[i];
        for (int k = i + 1; k <= n - 2; ++k) f[k] = k + 1;
    }
    // Canonical order: sort by support.
    std::vector<std::pair<FaceSupport, std::size_t>> keyed;
    keyed.reserve(tuples.size());
    for (std::size_t t = 0; t < tuples.size(); ++t)
        keyed.emplace_back(support_from_free_cols(n, tuples[t]), t);
    std::sort(keyed.begin(), keyed.end());
    std::map<std::vector<int>, std::size_t> index_of;
    for (std::size_t v = 0; v < keyed.size(); ++v) {
        const auto& tup = tuples[keyed[v].second];
        g.free_cols.push_back(tup);
        g.supports.push_back(keyed[v].first);
        g.vertices.push_back(vertex_from_free_cols(n, a, tup));
        index_of[tup] = v;
    }
    for (std::size_t v = 0; v < g.free_cols.size(); ++v) {
        std::vector<int> probe = g.free_cols[v];
        for (int row = 0; row <= n - 2; ++row) {
            const int old = probe[row];
            for (int col = row + 1; col <= n; ++col) {
                if (col == old) continue;
                probe[row] = col;
                auto it = index_of.find(probe);
                const std::size_t u = it->second;
                if (v < u) g.edges.emplace_back(v, u);
            }
            probe[row] = old;
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool verify_deformation(const VertexGraph& p, const std::vector<UTMatrix>& q_vertices,
                        const std::vector<std::size_t>& phi) {
    if (phi.size() != p.vertices.size())
        throw DimensionMismatch("verify_deformation: phi must cover every vertex");
    if (q_vertices.empty()) throw DimensionMismatch("verify_deformation: empty target");
    const int qn = q_vertices.front().size();
    for (const UTMatrix& q : q_vertices)
        if (q.size() != qn) throw DimensionMismatch("verify_deformation: ragged target sizes");
    for (std::size_t idx : phi)
        if (idx >= q_vertices.size())
            throw DimensionMismatch("verify_deformation: phi index out of range");
    if (p.vertices.empty() || p.vertices.front().size() != qn)
        throw DimensionMismatch("verify_deformation: source and target sizes differ");

    std::vector<char> hit(q_vertices.size(), 0);
    for (std::size_t idx : phi) hit[idx] = 1;
    if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) return false;

    for (const auto& [u, v] : p.edges) {
        const RatVec& pu = p.vertices[u].flat();
        const RatVec& pv = p.vertices[v].flat();
        const RatVec& qu = q_vertices[phi[u]].flat();
        const RatVec& qv = q_vertices[phi[v]].flat();
        // phi(u)-phi(v) must equal r (u-v) with one nonnegative r per edge.
        Rat r;
        bool have_r = false;
        for (std::size_t c = 0; c < pu.size(); ++c) {
            Rat dp = pu[c] - pv[c];
            if (dp != 0) {
                r = (qu[c] - qv[c]) / dp;
                have_r = true;
                break;
            }
        }
        if (!have_r) {
            // Coincident endpoints upstream force coincident images.
            for (std::size_t c = 0; c < qu.size(); ++c)
                if (qu[c] != qv[c]) return false;
            continue;
        }
        if (r < 0) return false;
        for (std::size_t c = 0; c < pu.size(); ++c)
            if (qu[c] - qv[c] != r * (pu[c] - pv[c])) return false;
    }
    return true;
}

}  // namespace tesler
