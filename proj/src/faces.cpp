#include "tesler/faces.hpp"

#include <algorithm>
#include <cstddef>

namespace tesler {

FaceSupport::FaceSupport(int n_, std::vector<Pos> positions) : n(n_), s(std::move(positions)) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool FaceSupport::contains(const Pos& p) const {
    return std::binary_search(s.begin(), s.end(), p);
}

std::string support_str(const FaceSupport& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.s.size(); ++k) {
        if (k) out += ",";
        out += pos_str(s.s[k]);
    }
    out += "}";
    return out;
}

std::vector<Pos> facet_positions(int n) {
    if (n < 1) throw Error("facet_positions: size must be at least 1");
    std::vector<Pos> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (!(i == n && j == n)) out.push_back({i, j});
    return out;
}

UTMatrix facet_normal(int n, const Pos& p) {
    if (n < 2) throw Error("facet_normal: size must be at least 2");
    if (p.i < 1 || p.j < p.i || p.j > n || (p.i == n && p.j == n))
        throw InvalidFacet("facet_normal: no facet at " + pos_str(p));
    UTMatrix v(n - 1);
    if (p.i == p.j) {
        const int l = p.i;
        for (int j = l; j <= n - 1; ++j) v.at(l, j) = 1;
        for (int i = 1; i < l; ++i) v.at(i, l - 1) = -1;
    } else {
        v.at(p.i, p.j - 1) = -1;
    }
    return v;
}

bool is_valid_face_support(int n, const std::vector<Pos>& s) {
    for (const Pos& p : s) {
        if (p.i < 1 || p.j < p.i || p.j > n || (p.i == n && p.j == n)) return false;
    }
    // Row i dies when all of (i,i)..(i,n) vanish.
    for (int i = 1; i < n; ++i) {
        int present = 0;
        for (const Pos& p : s)
            if (p.i == i) ++present;
        if (present == n - i + 1) return false;
    }
    return true;
}

namespace {

void subsets_rec(const std::vector<Pos>& all, std::size_t k, std::size_t from,
                 std::vector<Pos>& cur, int n, std::vector<FaceSupport>& out) {
    if (cur.size() == k) {
        if (is_valid_face_support(n, cur)) out.emplace_back(n, cur);
        return;
    }
    const std::size_t need = k - cur.size();
    for (std::size_t idx = from; idx + need <= all.size(); ++idx) {
        cur.push_back(all[idx]);
        subsets_rec(all, k, idx + 1, cur, n, out);
        cur.pop_back();
    }
}

// Complements of valid supports keep at least one position in every row
// 1..n-1. Walk the rows, hand each a nonempty surviving subset, spend the
// budget exactly.
void complements_rec(int n, int row, std::size_t budget, std::vector<Pos>& kept,
                     std::vector<FaceSupport>& out) {
    if (row == n) {
        if (budget != 0) return;
        std::vector<Pos> s;
        for (const Pos& p : facet_positions(n))
            if (!std::binary_search(kept.begin(), kept.end(), p)) s.push_back(p);
        out.emplace_back(n, std::move(s));
        return;
    }
    const int len = n - row + 1;
    const std::size_t rows_left = static_cast<std::size_t>(n - 1 - row);
    if (budget < 1 + rows_left) return;
    std::vector<Pos> row_pos;
    for (int j = row; j <= n; ++j) row_pos.push_back({row, j});
    const int max_take = static_cast<int>(std::min<std::size_t>(budget - rows_left, row_pos.size()));
    for (int take = 1; take <= max_take; ++take) {
        std::vector<int> comb(take);
        for (int t = 0; t < take; ++t) comb[t] = t;
        while (true) {
            for (int t = 0; t < take; ++t) kept.push_back(row_pos[comb[t]]);
            complements_rec(n, row + 1, budget - take, kept, out);
            kept.resize(kept.size() - take);
            int t = take - 1;
            while (t >= 0 && comb[t] == len - take + t) --t;
            if (t < 0) break;
            ++comb[t];
            for (int u = t + 1; u < take; ++u) comb[u] = comb[u - 1] + 1;
        }
    }
}

}  // namespace

std::vector<FaceSupport> enumerate_faces(int n, int k) {
    if (n < 1) throw Error("enumerate_faces: size must be at least 1");
    const int d = n * (n - 1) / 2;
    if (k < 0 || k > d) return {};
    const std::vector<Pos> all = facet_positions(n);
    std::vector<FaceSupport> out;
    const std::size_t complement = all.size() - static_cast<std::size_t>(k);
    if (k <= 3 || complement > static_cast<std::size_t>(n)) {
        std::vector<Pos> cur;
        subsets_rec(all, static_cast<std::size_t>(k), 0, cur, n, out);
    } else {
        std::vector<Pos> kept;
        complements_rec(n, 1, complement, kept, out);
        std::sort(out.begin(), out.end());
    }
    return out;
}

}  // namespace tesler
