#include "tesler/alpha.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>

#include "tesler/parallel.hpp"

namespace tesler {

namespace {

constexpr std::array<CaseLabel, 5> kCodim2Labels = {
    CaseLabel::Hypercube,    CaseLabel::DiagRow, CaseLabel::DiagCol,
    CaseLabel::DiagDetached, CaseLabel::DiagDiag,
};

constexpr std::array<CaseLabel, 12> kCodim3Labels = {
    CaseLabel::Hypercube,        CaseLabel::DiagDetachedDetached,
    CaseLabel::DiagRowDetached,  CaseLabel::DiagColDetached,
    CaseLabel::DiagRowRow,       CaseLabel::DiagRowCol,
    CaseLabel::DiagColCol,       CaseLabel::DiagDiagDetached,
    CaseLabel::DiagDiagRow,      CaseLabel::DiagDiagCol,
    CaseLabel::DiagDiagBridge,   CaseLabel::TripleDiag,
};

Rat quarter() { return ratio(1, 4); }
Rat eighth() { return ratio(1, 8); }

// Ratio helpers over polynomials in n, evaluated exactly.
Rat frac(long num, const Rat& den) { return Rat(num) / den; }

bool diagonal(const Pos& p) { return p.i == p.j; }

enum class Touch { None, Row, Col };

Touch touch(const Pos& upper, int l) {
    if (upper.i == l) return Touch::Row;
    if (upper.j == l) return Touch::Col;
    return Touch::None;
}

void set_row(RatMat& m, std::size_t r, const Rat& a, const Rat& b) {
    m(r, 0) = a;
    m(r, 1) = b;
}

void set_row(RatMat& m, std::size_t r, const Rat& a, const Rat& b, const Rat& c) {
    m(r, 0) = a;
    m(r, 1) = b;
    m(r, 2) = c;
}

bool match_upto_simultaneous_perm(const RatMat& ca, const RatMat& ma, const RatMat& ct,
                                  const RatMat& mt) {
    const std::size_t k = ca.rows;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; ok && i < k; ++i)
            for (std::size_t j = 0; ok && j < k; ++j)
                if (ca(i, j) != ct(perm[i], perm[j]) || ma(i, j) != mt(perm[i], perm[j]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

std::string to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::Hypercube: return "hypercube";
        case CaseLabel::DiagRow: return "diag+row";
        case CaseLabel::DiagCol: return "diag+col";
        case CaseLabel::DiagDetached: return "diag+detached";
        case CaseLabel::DiagDiag: return "diag+diag";
        case CaseLabel::DiagDetachedDetached: return "diag+detached+detached";
        case CaseLabel::DiagRowDetached: return "diag+row+detached";
        case CaseLabel::DiagColDetached: return "diag+col+detached";
        case CaseLabel::DiagRowRow: return "diag+row+row";
        case CaseLabel::DiagRowCol: return "diag+row+col";
        case CaseLabel::DiagColCol: return "diag+col+col";
        case CaseLabel::DiagDiagDetached: return "diag+diag+detached";
        case CaseLabel::DiagDiagRow: return "diag+diag+row";
        case CaseLabel::DiagDiagCol: return "diag+diag+col";
        case CaseLabel::DiagDiagBridge: return "diag+diag+bridge";
        case CaseLabel::TripleDiag: return "diag+diag+diag";
    }
    return "?";
}

AlphaValue alpha_codim01(int codim) {
    if (codim == 0) return {Rat(1), 0, AlphaMethod::ClosedFormCase};
    if (codim == 1) return {ratio(1, 2), 1, AlphaMethod::ClosedFormCase};
    throw UnsupportedCodim("alpha_codim01: codim must be 0 or 1");
}

AlphaValue alpha_codim2(const RatMat& m) {
    if (m.rows != 2 || m.cols != 2) throw DimensionMismatch("alpha_codim2: need a 2x2 matrix");
    if (m(0, 0) == 0 || m(1, 1) == 0) throw ZeroDiagonal("alpha_codim2: zero diagonal entry");
    Rat v = quarter() + ratio(1, 12) * (m(0, 1) / m(0, 0) + m(0, 1) / m(1, 1));
    return {v, 2, AlphaMethod::MdpFormula};
}

AlphaValue alpha_codim3(const RatMat& m) {
    if (m.rows != 3 || m.cols != 3) throw DimensionMismatch("alpha_codim3: need a 3x3 matrix");
    for (std::size_t i = 0; i < 3; ++i)
        if (m(i, i) == 0) throw ZeroDiagonal("alpha_codim3: zero diagonal entry");
    Rat s = m(0, 1) / m(0, 0) + m(0, 1) / m(1, 1) + m(0, 2) / m(0, 0) + m(0, 2) / m(2, 2) +
            m(1, 2) / m(1, 1) + m(1, 2) / m(2, 2);
    return {eighth() + ratio(1, 24) * s, 3, AlphaMethod::MdpFormula};
}

AlphaValue alpha_hypercube(int k) {
    if (k < 0 || k > 3) throw UnsupportedCodim("alpha_hypercube: codim 0..3 only");
    return {ratio(1, 1L << k), k, AlphaMethod::HypercubeFastPath};
}

CaseTag classify_case(int n, const FaceSupport& s) {
    if (s.n != n) throw DimensionMismatch("classify_case: size mismatch");
    if (!is_valid_face_support(n, s.s)) throw InvalidFacet("classify_case: " + support_str(s));
    const int k = s.codim();
    if (k != 2 && k != 3) throw UnsupportedCodim("classify_case: codim must be 2 or 3");
    std::vector<int> diags;
    std::vector<Pos> uppers;
    for (const Pos& p : s.s) {
        if (diagonal(p))
            diags.push_back(p.i);
        else
            uppers.push_back(p);
    }

    if (diags.empty()) return {k, CaseLabel::Hypercube};

    if (k == 2) {
        if (diags.size() == 2) return {2, CaseLabel::DiagDiag};
        const Touch t = touch(uppers[0], diags[0]);
        if (t == Touch::Row) return {2, CaseLabel::DiagRow};
        if (t == Touch::Col) return {2, CaseLabel::DiagCol};
        return {2, CaseLabel::DiagDetached};
    }

    if (diags.size() == 3) return {3, CaseLabel::TripleDiag};
    if (diags.size() == 2) {
        const Pos u = uppers[0];
        const bool row = u.i == diags[0] || u.i == diags[1];
        const bool col = u.j == diags[0] || u.j == diags[1];
        if (row && col) return {3, CaseLabel::DiagDiagBridge};
        if (row) return {3, CaseLabel::DiagDiagRow};
        if (col) return {3, CaseLabel::DiagDiagCol};
        return {3, CaseLabel::DiagDiagDetached};
    }
    const int l = diags[0];
    Touch t0 = touch(uppers[0], l);
    Touch t1 = touch(uppers[1], l);
    if (t0 > t1) std::swap(t0, t1);
    if (t0 == Touch::None && t1 == Touch::None) return {3, CaseLabel::DiagDetachedDetached};
    if (t0 == Touch::None && t1 == Touch::Row) return {3, CaseLabel::DiagRowDetached};
    if (t0 == Touch::None && t1 == Touch::Col) return {3, CaseLabel::DiagColDetached};
    if (t0 == Touch::Row && t1 == Touch::Row) return {3, CaseLabel::DiagRowRow};
    if (t0 == Touch::Row && t1 == Touch::Col) return {3, CaseLabel::DiagRowCol};
    return {3, CaseLabel::DiagColCol};
}

AlphaValue closed_form_alpha(int n, const CaseTag& tag) {
    if (tag.label == CaseLabel::Hypercube) {
        AlphaValue v = alpha_hypercube(tag.codim);
        v.method = AlphaMethod::ClosedFormCase;
        return v;
    }
    if (n < 3) throw CaseUnavailable("closed_form_alpha: no such faces below size 3");
    const bool needs_three_rows = tag.label == CaseLabel::DiagRowRow ||
                                  tag.label == CaseLabel::DiagRowCol ||
                                  tag.label == CaseLabel::DiagColCol ||
                                  tag.label == CaseLabel::TripleDiag;
    if (n == 3 && needs_three_rows)
        throw CaseUnavailable("closed_form_alpha: " + to_string(tag.label) +
                              " cannot occur at size 3");
    const Rat n1(n - 1), n2(n - 2);
    Rat v;
    switch (tag.label) {
        case CaseLabel::DiagRow: v = quarter() + ratio(1, 12) * Rat(n) / n1; break;
        case CaseLabel::DiagCol: v = quarter() - ratio(1, 12) * Rat(n) / n1; break;
        case CaseLabel::DiagDetached: v = quarter(); break;
        case CaseLabel::DiagDiag: v = quarter() + frac(1, 6 * n1); break;
        case CaseLabel::DiagDetachedDetached: v = eighth(); break;
        case CaseLabel::DiagRowDetached: v = eighth() + ratio(1, 24) * Rat(n) / n1; break;
        case CaseLabel::DiagColDetached: v = eighth() - ratio(1, 24) * Rat(n) / n1; break;
        case CaseLabel::DiagRowRow: v = eighth() + ratio(1, 12) * Rat(n) / n2; break;
        case CaseLabel::DiagRowCol: v = eighth() - frac(1, 12 * n2); break;
        case CaseLabel::DiagColCol: v = ratio(1, 24); break;
        case CaseLabel::DiagDiagDetached: v = eighth() + frac(1, 12 * n1); break;
        case CaseLabel::DiagDiagRow:
            v = eighth() + Rat(static_cast<long>(n) * n + n - 3) / (Rat(24) * n1 * n2);
            break;
        case CaseLabel::DiagDiagCol:
            v = eighth() - Rat(static_cast<long>(n) * n - 3 * n + 3) / (Rat(24) * n1 * n2);
            break;
        case CaseLabel::DiagDiagBridge: v = eighth(); break;
        case CaseLabel::TripleDiag: v = eighth() + frac(1, 4 * n2); break;
        case CaseLabel::Hypercube: break;
    }
    return {v, tag.codim, AlphaMethod::ClosedFormCase};
}

RatMat ncone_template(int n, const CaseTag& tag) {
    const Rat d(n - 1);
    if (tag.label == CaseLabel::Hypercube)
        return RatMat::identity(static_cast<std::size_t>(tag.codim));
    if (tag.codim == 2) {
        RatMat c(2, 2);
        switch (tag.label) {
            case CaseLabel::DiagRow: set_row(c, 0, d, Rat(-1)); set_row(c, 1, Rat(-1), Rat(1)); break;
            case CaseLabel::DiagCol: set_row(c, 0, d, Rat(1)); set_row(c, 1, Rat(1), Rat(1)); break;
            case CaseLabel::DiagDetached: set_row(c, 0, d, Rat(0)); set_row(c, 1, Rat(0), Rat(1)); break;
            case CaseLabel::DiagDiag: set_row(c, 0, d, Rat(-1)); set_row(c, 1, Rat(-1), d); break;
            default: throw UnsupportedCodim("ncone_template: not a codim-2 case");
        }
        return c;
    }
    RatMat c(3, 3);
    switch (tag.label) {
        case CaseLabel::DiagDetachedDetached:
            set_row(c, 0, d, Rat(0), Rat(0));
            set_row(c, 1, Rat(0), Rat(1), Rat(0));
            set_row(c, 2, Rat(0), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagRowDetached:
            set_row(c, 0, d, Rat(-1), Rat(0));
            set_row(c, 1, Rat(-1), Rat(1), Rat(0));
            set_row(c, 2, Rat(0), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagColDetached:
            set_row(c, 0, d, Rat(1), Rat(0));
            set_row(c, 1, Rat(1), Rat(1), Rat(0));
            set_row(c, 2, Rat(0), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagRowRow:
            set_row(c, 0, d, Rat(-1), Rat(-1));
            set_row(c, 1, Rat(-1), Rat(1), Rat(0));
            set_row(c, 2, Rat(-1), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagRowCol:
            set_row(c, 0, d, Rat(-1), Rat(1));
            set_row(c, 1, Rat(-1), Rat(1), Rat(0));
            set_row(c, 2, Rat(1), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagColCol:
            set_row(c, 0, d, Rat(1), Rat(1));
            set_row(c, 1, Rat(1), Rat(1), Rat(0));
            set_row(c, 2, Rat(1), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagDiagDetached:
            set_row(c, 0, d, Rat(-1), Rat(0));
            set_row(c, 1, Rat(-1), d, Rat(0));
            set_row(c, 2, Rat(0), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagDiagRow:
            // Order: untouched diagonal, touched diagonal, upper.
            set_row(c, 0, d, Rat(-1), Rat(0));
            set_row(c, 1, Rat(-1), d, Rat(-1));
            set_row(c, 2, Rat(0), Rat(-1), Rat(1));
            break;
        case CaseLabel::DiagDiagCol:
            set_row(c, 0, d, Rat(-1), Rat(0));
            set_row(c, 1, Rat(-1), d, Rat(1));
            set_row(c, 2, Rat(0), Rat(1), Rat(1));
            break;
        case CaseLabel::DiagDiagBridge:
            // Row-touched diagonal first, column-touched second.
            set_row(c, 0, d, Rat(-1), Rat(-1));
            set_row(c, 1, Rat(-1), d, Rat(1));
            set_row(c, 2, Rat(-1), Rat(1), Rat(1));
            break;
        case CaseLabel::TripleDiag:
            set_row(c, 0, d, Rat(-1), Rat(-1));
            set_row(c, 1, Rat(-1), d, Rat(-1));
            set_row(c, 2, Rat(-1), Rat(-1), d);
            break;
        default: throw UnsupportedCodim("ncone_template: not a codim-3 case");
    }
    return c;
}

RatMat fcone_template(int n, const CaseTag& tag) {
    if (tag.label == CaseLabel::Hypercube)
        return RatMat::identity(static_cast<std::size_t>(tag.codim));
    if (n < 3) throw CaseUnavailable("fcone_template: no such faces below size 3");
    const Rat n1(n - 1), n2(n - 2), n3(n - 3), nn(n);
    if (tag.codim == 2) {
        RatMat m(2, 2);
        switch (tag.label) {
            case CaseLabel::DiagRow:
                set_row(m, 0, 1 / n2, 1 / n2);
                set_row(m, 1, 1 / n2, n1 / n2);
                break;
            case CaseLabel::DiagCol:
                set_row(m, 0, 1 / n2, -1 / n2);
                set_row(m, 1, -1 / n2, n1 / n2);
                break;
            case CaseLabel::DiagDetached:
                set_row(m, 0, 1 / n1, Rat(0));
                set_row(m, 1, Rat(0), Rat(1));
                break;
            case CaseLabel::DiagDiag:
                set_row(m, 0, n1 / (nn * n2), 1 / (nn * n2));
                set_row(m, 1, 1 / (nn * n2), n1 / (nn * n2));
                break;
            default: throw UnsupportedCodim("fcone_template: not a codim-2 case");
        }
        return m;
    }
    RatMat m(3, 3);
    switch (tag.label) {
        case CaseLabel::DiagDetachedDetached:
            set_row(m, 0, 1 / n1, Rat(0), Rat(0));
            set_row(m, 1, Rat(0), Rat(1), Rat(0));
            set_row(m, 2, Rat(0), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagRowDetached:
            set_row(m, 0, 1 / n2, 1 / n2, Rat(0));
            set_row(m, 1, 1 / n2, n1 / n2, Rat(0));
            set_row(m, 2, Rat(0), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagColDetached:
            set_row(m, 0, 1 / n2, -1 / n2, Rat(0));
            set_row(m, 1, -1 / n2, n1 / n2, Rat(0));
            set_row(m, 2, Rat(0), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagRowRow:
            set_row(m, 0, 1 / n3, 1 / n3, 1 / n3);
            set_row(m, 1, 1 / n3, n2 / n3, 1 / n3);
            set_row(m, 2, 1 / n3, 1 / n3, n2 / n3);
            break;
        case CaseLabel::DiagRowCol:
            set_row(m, 0, 1 / n3, 1 / n3, -1 / n3);
            set_row(m, 1, 1 / n3, n2 / n3, -1 / n3);
            set_row(m, 2, -1 / n3, -1 / n3, n2 / n3);
            break;
        case CaseLabel::DiagColCol:
            set_row(m, 0, 1 / n3, -1 / n3, -1 / n3);
            set_row(m, 1, -1 / n3, n2 / n3, 1 / n3);
            set_row(m, 2, -1 / n3, 1 / n3, n2 / n3);
            break;
        case CaseLabel::DiagDiagDetached:
            set_row(m, 0, n1 / (nn * n2), 1 / (nn * n2), Rat(0));
            set_row(m, 1, 1 / (nn * n2), n1 / (nn * n2), Rat(0));
            set_row(m, 2, Rat(0), Rat(0), Rat(1));
            break;
        case CaseLabel::DiagDiagRow: {
            const Rat det = nn * nn - 3 * nn + 1;
            set_row(m, 0, n2 / det, 1 / det, 1 / det);
            set_row(m, 1, 1 / det, n1 / det, n1 / det);
            set_row(m, 2, 1 / det, n1 / det, (nn * nn - 2 * nn) / det);
            break;
        }
        case CaseLabel::DiagDiagCol: {
            const Rat det = nn * nn - 3 * nn + 1;
            set_row(m, 0, n2 / det, 1 / det, -1 / det);
            set_row(m, 1, 1 / det, n1 / det, -n1 / det);
            set_row(m, 2, -1 / det, -n1 / det, (nn * nn - 2 * nn) / det);
            break;
        }
        case CaseLabel::DiagDiagBridge:
            set_row(m, 0, 1 / n2, Rat(0), 1 / n2);
            set_row(m, 1, Rat(0), 1 / n2, -1 / n2);
            set_row(m, 2, 1 / n2, -1 / n2, nn / n2);
            break;
        case CaseLabel::TripleDiag:
            if (n == 3) throw CaseUnavailable("fcone_template: three diagonals need size 4");
            set_row(m, 0, n2 / (nn * n3), 1 / (nn * n3), 1 / (nn * n3));
            set_row(m, 1, 1 / (nn * n3), n2 / (nn * n3), 1 / (nn * n3));
            set_row(m, 2, 1 / (nn * n3), 1 / (nn * n3), n2 / (nn * n3));
            break;
        default: throw UnsupportedCodim("fcone_template: not a codim-3 case");
    }
    return m;
}

AlphaValue alpha_of_face(int n, const FaceSupport& s) {
    if (s.n != n) throw DimensionMismatch("alpha_of_face: size mismatch");
    if (!is_valid_face_support(n, s.s)) throw InvalidFacet("alpha_of_face: " + support_str(s));
    const int k = s.codim();
    if (k > 3) throw UnsupportedCodim("alpha_of_face: codim 0..3 only");
    if (k <= 1) return alpha_codim01(k);
    const bool any_diag = std::any_of(s.s.begin(), s.s.end(), [](const Pos& p) { return diagonal(p); });
    if (!any_diag) return alpha_hypercube(k);
    const Mdp m = fcone_mdp(n, s);
    return k == 2 ? alpha_codim2(m.m) : alpha_codim3(m.m);
}

bool TableReport::all_pass() const {
    return certificate_ok && inverse_ok && failures.empty() &&
           std::all_of(cases.begin(), cases.end(),
                       [](const CaseReport& c) { return c.mdp_match && c.alpha_match; });
}

TableReport verify_tables(int n, int jobs) {
    if (n < 3) throw Error("verify_tables: size must be at least 3");
    TableReport report;
    report.n = n;

    VertexGraph g = enumerate_vertices(n, RatVec(static_cast<std::size_t>(n), Rat(1)));
    report.vertices_checked = g.vertices.size();
    std::vector<char> cert(g.vertices.size(), 0);
    parallel_for(g.vertices.size(), jobs,
                 [&](std::size_t v) { cert[v] = check_vertex_unimodularity(g, v) ? 1 : 0; });
    report.certificate_ok = std::all_of(cert.begin(), cert.end(), [](char c) { return c != 0; });

    std::vector<FaceSupport> faces = enumerate_faces(n, 2);
    report.codim2_faces = faces.size();
    {
        std::vector<FaceSupport> f3 = enumerate_faces(n, 3);
        report.codim3_faces = f3.size();
        faces.insert(faces.end(), f3.begin(), f3.end());
    }

    struct FaceResult {
        CaseTag tag;
        bool inverse_ok = false;
        bool mdp_match = false;
        bool alpha_match = false;
        std::string what;
    };
    std::vector<FaceResult> results(faces.size());
    parallel_for(faces.size(), jobs, [&](std::size_t idx) {
        FaceResult& r = results[idx];
        const FaceSupport& s = faces[idx];
        try {
            r.tag = classify_case(n, s);
            const RatMat c = ncone_mdp(n, s).m;
            const RatMat m = fcone_mdp(n, s).m;
            r.inverse_ok = mat_mul(c, m) == RatMat::identity(c.rows);
            r.mdp_match = match_upto_simultaneous_perm(c, m, ncone_template(n, r.tag),
                                                       fcone_template(n, r.tag));
            const Rat direct =
                (s.codim() == 2 ? alpha_codim2(m) : alpha_codim3(m)).value;
            const Rat closed = closed_form_alpha(n, r.tag).value;
            r.alpha_match = direct == closed;
            if (r.tag.label == CaseLabel::Hypercube)
                r.alpha_match = r.alpha_match && direct == alpha_hypercube(s.codim()).value;
            if (!r.inverse_ok) r.what = "cone matrices fail to invert each other";
            else if (!r.mdp_match) r.what = "matrices differ from the case prototype";
            else if (!r.alpha_match) r.what = "closed form disagrees with the dot-product formula";
        } catch (const std::exception& e) {
            r.what = e.what();
        }
    });

    auto add_case = [&](int codim, CaseLabel label) {
        CaseReport c;
        c.tag = {codim, label};
        try {
            c.alpha = closed_form_alpha(n, c.tag).value;
        } catch (const CaseUnavailable&) {
            c.alpha = 0;
        }
        report.cases.push_back(c);
    };
    for (CaseLabel label : kCodim2Labels) add_case(2, label);
    for (CaseLabel label : kCodim3Labels) add_case(3, label);

    for (std::size_t idx = 0; idx < results.size(); ++idx) {
        const FaceResult& r = results[idx];
        if (!r.what.empty()) {
            report.failures.push_back({faces[idx], r.what});
            continue;
        }
        report.inverse_ok = report.inverse_ok && r.inverse_ok;
        for (CaseReport& c : report.cases)
            if (c.tag == r.tag) {
                ++c.count;
                c.mdp_match = c.mdp_match && r.mdp_match;
                c.alpha_match = c.alpha_match && r.alpha_match;
            }
    }
    return report;
}

PositivityReport positivity_report(int n, int jobs) {
    if (n < 3) throw Error("positivity_report: size must be at least 3");
    PositivityReport rep;
    rep.n = n;
    for (int k : {2, 3}) {
        std::vector<FaceSupport> faces = enumerate_faces(n, k);
        std::vector<Rat> vals(faces.size());
        parallel_for(faces.size(), jobs,
                     [&](std::size_t i) { vals[i] = alpha_of_face(n, faces[i]).value; });
        Rat best;
        std::vector<FaceSupport> arg;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (i == 0 || vals[i] < best) {
                best = vals[i];
                arg.clear();
            }
            if (vals[i] == best) arg.push_back(faces[i]);
        }
        if (k == 2) {
            rep.min_codim2 = best;
            rep.min_codim2_faces = std::move(arg);
        } else {
            rep.min_codim3 = best;
            rep.min_codim3_faces = std::move(arg);
        }
    }
    rep.codim2_formula_match =
        rep.min_codim2 == quarter() - Rat(n) / (Rat(12) * Rat(n - 1));
    rep.all_positive = rep.min_codim2 > 0 && rep.min_codim3 > 0;
    return rep;
}

}  // namespace tesler
