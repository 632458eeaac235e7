#pragma once

#include <vector>

#include "tesler/faces.hpp"
#include "tesler/linalg.hpp"
#include "tesler/rational.hpp"

namespace tesler {

// Number of lattice points of the t-th dilate of the projected polytope,
// or of the face obtained by zeroing the entries listed in `support`.
// Hook sums must be positive integers.  Runs a carry-vector DP over rows,
// so it is exact but exponential in n; fine through n = 5 or so.
Int count_points(int n, const RatVec& a, long t);
Int count_points(int n, const RatVec& a, long t, const FaceSupport& support);

struct EhrhartPoly {
    int n = 0;
    RatVec a;
    FaceSupport support;
    RatVec coeffs;  // ascending, length dim + 1

    int dim() const { return static_cast<int>(coeffs.size()) - 1; }
    Rat leading() const { return coeffs.back(); }
};

// Interpolates the counting polynomial from dim + 1 dilates, then re-counts
// two further dilates as a guard; a disagreement throws InterpolationMismatch.
EhrhartPoly ehrhart_poly(int n, const RatVec& a);
EhrhartPoly face_ehrhart(int n, const RatVec& a, const FaceSupport& support);

// Relative volume of a face: the leading coefficient of its counting
// polynomial, normalized to the lattice inside the face's affine span.
Rat face_nvol(int n, const RatVec& a, const FaceSupport& support);

// Weighted face sum for one coefficient: over all faces of the given
// dimension, add alpha(F) * nvol(F).  Only dimensions within three of the
// top are reachable, matching the alpha machinery.
Rat mcmullen_coefficient(int n, const RatVec& a, int dim, int jobs = 1);

struct McMullenTerm {
    int dim = 0;
    Rat coeff;     // from the interpolated polynomial
    Rat weighted;  // alpha-weighted volume sum over faces of this dimension
    bool match = false;
};

struct McMullenReport {
    int n = 0;
    RatVec a;
    RatVec ehrhart;
    std::vector<McMullenTerm> terms;

    bool all_match() const {
        for (const auto& t : terms)
            if (!t.match) return false;
        return !terms.empty();
    }
};

// Compares every reachable coefficient of the counting polynomial against
// its weighted face sum.  Covers all coefficients when n <= 3.
McMullenReport mcmullen_check(int n, const RatVec& a, int jobs = 1);

}  // namespace tesler
