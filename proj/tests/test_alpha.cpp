#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "tesler/alpha.hpp"

using namespace tesler;

namespace {

RatMat permuted(const RatMat& m, const std::vector<std::size_t>& perm) {
    RatMat out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = m(perm[i], perm[j]);
    return out;
}

const std::vector<CaseTag> kAllTags = {
    {2, CaseLabel::Hypercube},       {2, CaseLabel::DiagRow},
    {2, CaseLabel::DiagCol},         {2, CaseLabel::DiagDetached},
    {2, CaseLabel::DiagDiag},        {3, CaseLabel::Hypercube},
    {3, CaseLabel::DiagDetachedDetached}, {3, CaseLabel::DiagRowDetached},
    {3, CaseLabel::DiagColDetached}, {3, CaseLabel::DiagRowRow},
    {3, CaseLabel::DiagRowCol},      {3, CaseLabel::DiagColCol},
    {3, CaseLabel::DiagDiagDetached}, {3, CaseLabel::DiagDiagRow},
    {3, CaseLabel::DiagDiagCol},     {3, CaseLabel::DiagDiagBridge},
    {3, CaseLabel::TripleDiag},
};

bool available(int n, const CaseTag& t) {
    if (t.label == CaseLabel::Hypercube) return true;
    if (n < 3) return false;
    const bool needs4 = t.label == CaseLabel::DiagRowRow || t.label == CaseLabel::DiagRowCol ||
                        t.label == CaseLabel::DiagColCol || t.label == CaseLabel::TripleDiag;
    return !(n == 3 && needs4);
}

}  // namespace

TEST_CASE("constant values in low codimension") {
    CHECK(alpha_codim01(0).value == 1);
    CHECK(alpha_codim01(1).value == ratio(1, 2));
    CHECK_THROWS_AS(alpha_codim01(2), UnsupportedCodim);

    CHECK(alpha_hypercube(0).value == 1);
    CHECK(alpha_hypercube(1).value == ratio(1, 2));
    CHECK(alpha_hypercube(2).value == ratio(1, 4));
    CHECK(alpha_hypercube(3).value == ratio(1, 8));
    CHECK(alpha_hypercube(3).method == AlphaMethod::HypercubeFastPath);
    CHECK_THROWS_AS(alpha_hypercube(4), UnsupportedCodim);
}

TEST_CASE("codim-2 dot-product formula") {
    CHECK(alpha_codim2(RatMat::identity(2)).value == ratio(1, 4));

    RatMat m(2, 2);
    m(0, 0) = ratio(1, 2);
    m(0, 1) = m(1, 0) = ratio(1, 2);
    m(1, 1) = ratio(3, 2);
    CHECK(alpha_codim2(m).value == ratio(13, 36));

    RatMat dd(2, 2);
    dd(0, 0) = dd(1, 1) = ratio(3, 8);
    dd(0, 1) = dd(1, 0) = ratio(1, 8);
    CHECK(alpha_codim2(dd).value == ratio(11, 36));

    RatMat zero(2, 2);
    CHECK_THROWS_AS(alpha_codim2(zero), ZeroDiagonal);
    CHECK_THROWS_AS(alpha_codim2(RatMat::identity(3)), DimensionMismatch);
}

TEST_CASE("codim-3 dot-product formula") {
    CHECK(alpha_codim3(RatMat::identity(3)).value == ratio(1, 8));

    // Three vanishing diagonals at n = 4.
    RatMat m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = (i == j) ? ratio(1, 2) : ratio(1, 4);
    CHECK(alpha_codim3(m).value == ratio(1, 4));

    CHECK_THROWS_AS(alpha_codim3(RatMat::identity(2)), DimensionMismatch);
}

TEST_CASE("alpha formulas are symmetric in the generators") {
    RatMat m = fcone_template(5, {3, CaseLabel::DiagDiagRow});
    std::vector<std::size_t> perm{0, 1, 2};
    const Rat want = alpha_codim3(m).value;
    do {
        CHECK(alpha_codim3(permuted(m, perm)).value == want);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("classify_case") {
    CHECK(classify_case(4, FaceSupport(4, {{1, 1}, {1, 3}})).label == CaseLabel::DiagRow);
    CHECK(classify_case(4, FaceSupport(4, {{2, 2}, {1, 2}})).label == CaseLabel::DiagCol);
    CHECK(classify_case(4, FaceSupport(4, {{1, 1}, {2, 3}})).label == CaseLabel::DiagDetached);
    CHECK(classify_case(4, FaceSupport(4, {{1, 1}, {2, 2}})).label == CaseLabel::DiagDiag);
    CHECK(classify_case(4, FaceSupport(4, {{1, 2}, {3, 4}})).label == CaseLabel::Hypercube);

    CHECK(classify_case(5, FaceSupport(5, {{1, 1}, {1, 2}, {1, 3}})).label == CaseLabel::DiagRowRow);
    CHECK(classify_case(5, FaceSupport(5, {{2, 2}, {1, 2}, {2, 4}})).label == CaseLabel::DiagRowCol);
    CHECK(classify_case(5, FaceSupport(5, {{3, 3}, {1, 3}, {2, 3}})).label == CaseLabel::DiagColCol);
    CHECK(classify_case(5, FaceSupport(5, {{2, 2}, {1, 2}, {3, 4}})).label == CaseLabel::DiagColDetached);
    CHECK(classify_case(5, FaceSupport(5, {{2, 2}, {2, 3}, {1, 4}})).label == CaseLabel::DiagRowDetached);
    CHECK(classify_case(5, FaceSupport(5, {{1, 1}, {2, 2}, {3, 4}})).label == CaseLabel::DiagDiagDetached);
    CHECK(classify_case(5, FaceSupport(5, {{1, 1}, {2, 2}, {1, 3}})).label == CaseLabel::DiagDiagRow);
    CHECK(classify_case(5, FaceSupport(5, {{2, 2}, {3, 3}, {1, 3}})).label == CaseLabel::DiagDiagCol);
    CHECK(classify_case(5, FaceSupport(5, {{1, 1}, {2, 2}, {1, 2}})).label == CaseLabel::DiagDiagBridge);
    CHECK(classify_case(5, FaceSupport(5, {{1, 1}, {2, 2}, {3, 3}})).label == CaseLabel::TripleDiag);
    CHECK(classify_case(5, FaceSupport(5, {{1, 2}, {2, 3}, {3, 4}})).label == CaseLabel::Hypercube);

    CHECK_THROWS_AS(classify_case(4, FaceSupport(4, {{1, 1}})), UnsupportedCodim);
    CHECK_THROWS_AS(classify_case(3, FaceSupport(3, {{2, 2}, {2, 3}})), InvalidFacet);
}

TEST_CASE("closed forms at pinned sizes") {
    CHECK(closed_form_alpha(3, {2, CaseLabel::DiagRow}).value == ratio(3, 8));
    CHECK(closed_form_alpha(3, {2, CaseLabel::DiagCol}).value == ratio(1, 8));
    CHECK(closed_form_alpha(3, {2, CaseLabel::DiagDetached}).value == ratio(1, 4));
    CHECK(closed_form_alpha(3, {2, CaseLabel::DiagDiag}).value == ratio(1, 3));
    CHECK(closed_form_alpha(4, {2, CaseLabel::DiagCol}).value == ratio(5, 36));

    CHECK(closed_form_alpha(3, {3, CaseLabel::DiagRowDetached}).value == ratio(3, 16));
    CHECK(closed_form_alpha(3, {3, CaseLabel::DiagColDetached}).value == ratio(1, 16));
    CHECK(closed_form_alpha(3, {3, CaseLabel::DiagDiagRow}).value == ratio(5, 16));
    CHECK(closed_form_alpha(3, {3, CaseLabel::DiagDiagBridge}).value == ratio(1, 8));
    CHECK(closed_form_alpha(4, {3, CaseLabel::TripleDiag}).value == ratio(1, 4));
    CHECK(closed_form_alpha(4, {3, CaseLabel::DiagColCol}).value == ratio(1, 24));
    CHECK(closed_form_alpha(7, {3, CaseLabel::DiagColCol}).value == ratio(1, 24));
    CHECK(closed_form_alpha(5, {3, CaseLabel::DiagDiagRow}).value ==
          ratio(1, 8) + ratio(27, 288));

    CHECK_THROWS_AS(closed_form_alpha(3, {3, CaseLabel::TripleDiag}), CaseUnavailable);
    CHECK_THROWS_AS(closed_form_alpha(3, {3, CaseLabel::DiagRowRow}), CaseUnavailable);
    CHECK_THROWS_AS(closed_form_alpha(3, {3, CaseLabel::DiagRowCol}), CaseUnavailable);
    CHECK_THROWS_AS(closed_form_alpha(3, {3, CaseLabel::DiagColCol}), CaseUnavailable);
    CHECK_THROWS_AS(closed_form_alpha(2, {2, CaseLabel::DiagRow}), CaseUnavailable);
}

TEST_CASE("case prototypes invert each other and match the closed forms") {
    for (int n = 3; n <= 8; ++n)
        for (const CaseTag& tag : kAllTags) {
            if (!available(n, tag)) continue;
            CAPTURE(n);
            CAPTURE(to_string(tag.label));
            const RatMat c = ncone_template(n, tag);
            const RatMat m = fcone_template(n, tag);
            CHECK(mat_mul(c, m) == RatMat::identity(c.rows));
            const Rat direct = (tag.codim == 2 ? alpha_codim2(m) : alpha_codim3(m)).value;
            CHECK(direct == closed_form_alpha(n, tag).value);
        }
}

TEST_CASE("alpha_of_face dispatch") {
    CHECK(alpha_of_face(3, FaceSupport(3, {})).value == 1);
    CHECK(alpha_of_face(3, FaceSupport(3, {{1, 1}})).value == ratio(1, 2));
    CHECK(alpha_of_face(3, FaceSupport(3, {{1, 1}, {2, 3}})).value == ratio(1, 4));
    CHECK(alpha_of_face(3, FaceSupport(3, {{1, 1}, {2, 2}})).value == ratio(1, 3));
    CHECK(alpha_of_face(4, FaceSupport(4, {{1, 1}, {2, 2}, {3, 3}})).value == ratio(1, 4));

    AlphaValue hyper = alpha_of_face(3, FaceSupport(3, {{1, 2}, {1, 3}}));
    CHECK(hyper.value == ratio(1, 4));
    CHECK(hyper.method == AlphaMethod::HypercubeFastPath);

    AlphaValue formula = alpha_of_face(3, FaceSupport(3, {{1, 1}, {2, 2}}));
    CHECK(formula.method == AlphaMethod::MdpFormula);

    CHECK_THROWS_AS(alpha_of_face(4, FaceSupport(4, {{1, 1}, {1, 2}, {1, 3}, {2, 3}})),
                    UnsupportedCodim);
    CHECK_THROWS_AS(alpha_of_face(3, FaceSupport(3, {{2, 2}, {2, 3}})), InvalidFacet);
}

TEST_CASE("closed form equals the dot-product route on every face") {
    for (int n = 3; n <= 5; ++n)
        for (int k : {2, 3})
            for (const FaceSupport& s : enumerate_faces(n, k)) {
                CAPTURE(n);
                CAPTURE(support_str(s));
                const CaseTag tag = classify_case(n, s);
                const Rat closed = closed_form_alpha(n, tag).value;
                CHECK(alpha_of_face(n, s).value == closed);
            }
}

TEST_CASE("vertex alpha values at n=3 sum to one") {
    Rat total = 0;
    for (const FaceSupport& s : enumerate_faces(3, 3)) total += alpha_of_face(3, s).value;
    CHECK(total == 1);
}

TEST_CASE("verify_tables at n=3 with pinned case counts") {
    TableReport rep = verify_tables(3);
    CHECK(rep.all_pass());
    CHECK(rep.certificate_ok);
    CHECK(rep.vertices_checked == 6);
    CHECK(rep.codim2_faces == 9);
    CHECK(rep.codim3_faces == 6);
    CHECK(rep.inverse_ok);
    CHECK(rep.failures.empty());

    auto count_of = [&](int codim, CaseLabel label) -> std::size_t {
        for (const CaseReport& c : rep.cases)
            if (c.tag == CaseTag{codim, label}) return c.count;
        return static_cast<std::size_t>(-1);
    };
    CHECK(count_of(2, CaseLabel::Hypercube) == 3);
    CHECK(count_of(2, CaseLabel::DiagRow) == 2);
    CHECK(count_of(2, CaseLabel::DiagCol) == 1);
    CHECK(count_of(2, CaseLabel::DiagDetached) == 2);
    CHECK(count_of(2, CaseLabel::DiagDiag) == 1);

    CHECK(count_of(3, CaseLabel::Hypercube) == 1);
    CHECK(count_of(3, CaseLabel::DiagRowDetached) == 2);
    CHECK(count_of(3, CaseLabel::DiagColDetached) == 1);
    CHECK(count_of(3, CaseLabel::DiagDiagRow) == 1);
    CHECK(count_of(3, CaseLabel::DiagDiagBridge) == 1);
    // The four shapes needing three hook rows cannot appear yet.
    CHECK(count_of(3, CaseLabel::DiagRowRow) == 0);
    CHECK(count_of(3, CaseLabel::DiagRowCol) == 0);
    CHECK(count_of(3, CaseLabel::DiagColCol) == 0);
    CHECK(count_of(3, CaseLabel::TripleDiag) == 0);
    CHECK(count_of(3, CaseLabel::DiagDiagDetached) == 0);
    CHECK(count_of(3, CaseLabel::DiagDiagCol) == 0);
}

TEST_CASE("verify_tables at n=4") {
    TableReport rep = verify_tables(4, 2);
    CHECK(rep.all_pass());
    CHECK(rep.vertices_checked == 24);
    CHECK(rep.codim2_faces == 35);
    CHECK(rep.codim3_faces == 76);
    std::size_t total2 = 0, total3 = 0;
    for (const CaseReport& c : rep.cases)
        (c.tag.codim == 2 ? total2 : total3) += c.count;
    CHECK(total2 == 35);
    CHECK(total3 == 76);
}

TEST_CASE("positivity_report") {
    PositivityReport p3 = positivity_report(3);
    CHECK(p3.min_codim2 == ratio(1, 8));
    CHECK(p3.codim2_formula_match);
    CHECK(p3.min_codim3 == ratio(1, 16));
    CHECK(p3.all_positive);
    REQUIRE(p3.min_codim2_faces.size() == 1);
    CHECK(p3.min_codim2_faces[0] == FaceSupport(3, {{1, 2}, {2, 2}}));

    PositivityReport p4 = positivity_report(4);
    CHECK(p4.min_codim2 == ratio(5, 36));
    CHECK(p4.codim2_formula_match);
    CHECK(p4.min_codim3 == ratio(1, 24));
    CHECK(p4.all_positive);
}
