#pragma once

#include <cstddef>
#include <vector>

#include "tesler/faces.hpp"
#include "tesler/linalg.hpp"
#include "tesler/vertices.hpp"

namespace tesler {

enum class ConeKind { Normal, Feasible };

// Matrix of pairwise dot products of a cone's generators, rows and columns
// in the sorted position order of the face support.
struct Mdp {
    ConeKind kind = ConeKind::Normal;
    RatMat m;

    std::size_t k() const { return m.rows; }
};

// Gram matrix of the outer facet normals indexed by s.
Mdp ncone_mdp(int n, const FaceSupport& s);

// Gram matrix of the primitive generators of the cone of feasible
// directions, computed as the exact inverse of the normal-cone matrix.
Mdp fcone_mdp(int n, const FaceSupport& s);

// All vertices of the face cut out by s, as free-column tuples, sorted.
std::vector<std::vector<int>> face_vertex_tuples(int n, const FaceSupport& s);

// Independent route to fcone_mdp through explicit edge geometry at a base
// vertex of the face: project the off-face edge directions onto the
// orthogonal complement of the face span and take dot products. Checks the
// defining relations <normal_j, u_i> = -delta_ij along the way. The
// default base vertex is the one whose support is lexicographically
// smallest among the vertices of the face.
Mdp fcone_mdp_oracle(int n, const FaceSupport& s);
Mdp fcone_mdp_oracle_at(int n, const FaceSupport& s, const std::vector<int>& free_cols);

// True when the primitive edge directions at vertex v form a basis of the
// integer lattice after the diagonal-erasing projection.
bool check_vertex_unimodularity(const VertexGraph& g, std::size_t v);

}  // namespace tesler
