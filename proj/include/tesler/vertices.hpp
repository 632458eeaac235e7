#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tesler/faces.hpp"
#include "tesler/utmatrix.hpp"

namespace tesler {

// Vertices of the polytope with hook sums a (strictly positive), plus the
// edge graph. A vertex keeps exactly one free position in each of rows
// 1..n-1; the tuple of free columns determines it.
struct VertexGraph {
    int n = 0;
    RatVec a;
    std::vector<UTMatrix> vertices;
    std::vector<std::vector<int>> free_cols;          // per vertex, rows 1..n-1
    std::vector<FaceSupport> supports;                // facets through each vertex
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted

    std::vector<std::vector<std::size_t>> neighbors() const;
};

// The vertex whose free position in row i is column f[i-1]. Entries follow
// from the hook sums by forward substitution. Throws InfeasibleVertex when
// f is out of range.
UTMatrix vertex_from_free_cols(int n, const RatVec& a, const std::vector<int>& f);

FaceSupport support_from_free_cols(int n, const std::vector<int>& f);

// There are n! vertices; two are adjacent exactly when their free-column
// tuples differ in one row. Requires strictly positive a.
VertexGraph enumerate_vertices(int n, const RatVec& a);

// Checks that phi maps the vertex set of P onto q_vertices with every edge
// of P carried to a nonnegative multiple of itself: phi surjective and
// phi(v)-phi(w) = r (v-w), r >= 0, edge by edge. Throws DimensionMismatch
// on shape violations.
bool verify_deformation(const VertexGraph& p, const std::vector<UTMatrix>& q_vertices,
                        const std::vector<std::size_t>& phi);

}  // namespace tesler
