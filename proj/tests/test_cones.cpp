#include <doctest.h>

#include <vector>

#include "tesler/cones.hpp"

using namespace tesler;

namespace {

RatMat sym2(const Rat& a, const Rat& b, const Rat& d) {
    RatMat m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = b;
    m(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("ncone_mdp on known supports") {
    Mdp c = ncone_mdp(4, FaceSupport(4, {{1, 1}, {1, 2}}));
    CHECK(c.kind == ConeKind::Normal);
    CHECK(c.m == sym2(Rat(3), Rat(-1), Rat(1)));

    Mdp diag3 = ncone_mdp(4, FaceSupport(4, {{1, 1}, {2, 2}, {3, 3}}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(diag3.m(i, j) == (i == j ? Rat(3) : Rat(-1)));

    // Strictly upper positions in distinct slots give orthonormal normals.
    CHECK(ncone_mdp(4, FaceSupport(4, {{1, 3}, {2, 4}})).m == RatMat::identity(2));

    CHECK_THROWS_AS(ncone_mdp(3, FaceSupport(3, {{2, 2}, {2, 3}})), InvalidFacet);
    CHECK_THROWS_AS(ncone_mdp(3, FaceSupport(4, {{1, 1}})), DimensionMismatch);
}

TEST_CASE("fcone_mdp inverts the normal matrix") {
    Mdp m = fcone_mdp(4, FaceSupport(4, {{1, 1}, {1, 2}}));
    CHECK(m.kind == ConeKind::Feasible);
    CHECK(m.m == sym2(ratio(1, 2), ratio(1, 2), ratio(3, 2)));

    Mdp diag3 = fcone_mdp(4, FaceSupport(4, {{1, 1}, {2, 2}, {3, 3}}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(diag3.m(i, j) == (i == j ? ratio(1, 2) : ratio(1, 4)));

    CHECK(fcone_mdp(5, FaceSupport(5, {{1, 4}, {2, 3}, {3, 5}})).m == RatMat::identity(3));
}

TEST_CASE("normal and feasible matrices are exact inverses across the desk range") {
    for (int n = 3; n <= 5; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const FaceSupport& s : enumerate_faces(n, k)) {
                Mdp c = ncone_mdp(n, s);
                Mdp m = fcone_mdp(n, s);
                CAPTURE(n);
                CAPTURE(support_str(s));
                CHECK(mat_mul(c.m, m.m) == RatMat::identity(static_cast<std::size_t>(k)));
                CHECK(m.m.is_symmetric());
            }
}

TEST_CASE("face_vertex_tuples") {
    auto all = face_vertex_tuples(3, FaceSupport(3, {}));
    CHECK(all.size() == 6);

    auto facet = face_vertex_tuples(3, FaceSupport(3, {{1, 1}}));
    CHECK(facet.size() == 4);
    for (const auto& f : facet) CHECK(f[0] != 1);

    auto vertex = face_vertex_tuples(3, FaceSupport(3, {{1, 1}, {1, 3}, {2, 2}}));
    CHECK(vertex == std::vector<std::vector<int>>{{2, 3}});
}

TEST_CASE("oracle reproduces codim-1 matrices") {
    // Diagonal facet of the n=3 polytope: normal squares to n-1.
    Mdp m = fcone_mdp_oracle(3, FaceSupport(3, {{1, 1}}));
    CHECK(m.m.rows == 1);
    CHECK(m.m(0, 0) == ratio(1, 2));

    Mdp u = fcone_mdp_oracle(3, FaceSupport(3, {{1, 3}}));
    CHECK(u.m(0, 0) == 1);
}

TEST_CASE("oracle matches the inverse route on every small face") {
    for (int n = 3; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const FaceSupport& s : enumerate_faces(n, k)) {
                CAPTURE(n);
                CAPTURE(support_str(s));
                CHECK(fcone_mdp_oracle(n, s).m == fcone_mdp(n, s).m);
            }
}

TEST_CASE("oracle is independent of the base vertex") {
    for (int k = 1; k <= 3; ++k)
        for (const FaceSupport& s : enumerate_faces(3, k)) {
            const Mdp want = fcone_mdp(3, s);
            for (const auto& f : face_vertex_tuples(3, s)) {
                CAPTURE(support_str(s));
                CHECK(fcone_mdp_oracle_at(3, s, f).m == want.m);
            }
        }
}

TEST_CASE("oracle rejects a base vertex off the face") {
    FaceSupport s(3, {{1, 1}});
    CHECK_THROWS_AS(fcone_mdp_oracle_at(3, s, {1, 2}), InfeasibleVertex);
    CHECK_THROWS_AS(fcone_mdp_oracle_at(3, s, {2}), InfeasibleVertex);
}

TEST_CASE("vertex unimodularity certificate") {
    for (int n = 2; n <= 4; ++n) {
        VertexGraph g = enumerate_vertices(n, RatVec(static_cast<std::size_t>(n), Rat(1)));
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
            CAPTURE(n);
            CAPTURE(v);
            CHECK(check_vertex_unimodularity(g, v));
        }
    }
    VertexGraph g = enumerate_vertices(2, RatVec{Rat(1), Rat(1)});
    CHECK_THROWS_AS(check_vertex_unimodularity(g, 99), Error);
}
