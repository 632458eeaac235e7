#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "tesler/rational.hpp"

namespace tesler {

// 1-indexed matrix position, upper triangle only (i <= j).
struct Pos {
    int i = 0;
    int j = 0;
    auto operator<=>(const Pos&) const = default;
};

std::string pos_str(const Pos& p);

// Upper-triangular n x n matrix with rational entries, stored in
// lexicographic position order (1,1),(1,2),...,(n,n).
class UTMatrix {
  public:
    explicit UTMatrix(int n);

    int size() const { return n_; }

    Rat& at(int i, int j);
    const Rat& at(int i, int j) const;

    // Entries in lexicographic position order; doubles as the flattening
    // used for dot products against cone normals.
    const RatVec& flat() const { return e_; }
    RatVec& flat() { return e_; }

    static std::size_t entry_count(int n);
    static std::vector<Pos> positions(int n);

    bool operator==(const UTMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const UTMatrix& o) const { return !(*this == o); }

  private:
    int n_;
    RatVec e_;
};

// k-th hook sum: the entries of row k minus the entries strictly above the
// diagonal in column k. Returns all n of them.
RatVec hook_sum(const UTMatrix& m);

// A strictly positive point of the polytope with hook sums a, with every
// entry of rows 1..n-1 positive. Throws NonPositiveFirstEntry when a[0] <= 0.
UTMatrix interior_point(const RatVec& a);

// Forgets the diagonal: y(i,j) = x(i,j+1). Defined for n >= 2, lands in
// dimension n-1.
UTMatrix psi_diag(const UTMatrix& m);

// Right inverse of psi_diag for prescribed hook sums: restores the diagonal
// row by row from x(k,k) = a_k + column(k) above - row(k) off-diagonal.
UTMatrix lift_psi_diag(const UTMatrix& y, const RatVec& a);

bool is_strictly_positive(const RatVec& a);

// Removes leading zero hook sums (the rows they force to vanish), returning
// how many were dropped. The polytope for the trimmed vector is a
// coordinate-erasing bijection away from the original one.
std::size_t trim_leading_zeros(RatVec& a);

// Throws NonPositiveHookSum unless every entry is > 0.
void require_strictly_positive(const RatVec& a);

}  // namespace tesler
