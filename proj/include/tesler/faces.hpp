#pragma once

#include <vector>

#include "tesler/utmatrix.hpp"

namespace tesler {

// A face of the polytope named by the set of facets it lies on: the
// positions whose entries vanish. Positions are kept sorted and unique.
struct FaceSupport {
    int n = 0;
    std::vector<Pos> s;

    FaceSupport() = default;
    FaceSupport(int n_, std::vector<Pos> positions);

    int codim() const { return static_cast<int>(s.size()); }
    bool contains(const Pos& p) const;

    bool operator==(const FaceSupport& o) const { return n == o.n && s == o.s; }
    auto operator<=>(const FaceSupport& o) const = default;
};

std::string support_str(const FaceSupport& s);

// Positions carrying a facet: every (i,j) with 1 <= i <= j <= n except
// (n,n), in lexicographic order.
std::vector<Pos> facet_positions(int n);

// Outer normal of the facet at p for the projected polytope, as a vector in
// dimension n-1. Diagonal positions map to a shifted hook pattern, strictly
// upper ones to a negated unit vector. Throws InvalidFacet for (n,n) or
// positions outside the upper triangle.
UTMatrix facet_normal(int n, const Pos& p);

// A set of vanishing positions cuts out a nonempty face exactly when no row
// i has all of (i,i),...,(i,n) forced to zero.
bool is_valid_face_support(int n, const std::vector<Pos>& s);

// All codimension-k faces, sorted. Small k iterates position subsets
// directly; k near the dimension walks complements, which factor into one
// surviving position per row.
std::vector<FaceSupport> enumerate_faces(int n, int k);

}  // namespace tesler
