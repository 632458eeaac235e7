#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tesler/cones.hpp"
#include "tesler/faces.hpp"
#include "tesler/linalg.hpp"

namespace tesler {

enum class AlphaMethod { MdpFormula, ClosedFormCase, HypercubeFastPath };

struct AlphaValue {
    Rat value;
    int codim = 0;
    AlphaMethod method = AlphaMethod::MdpFormula;
};

// Interaction pattern of a low-codimension face's vanishing positions:
// how many are diagonal, and whether each strictly upper one sits on the
// row of a vanishing diagonal, on its hook column, or touches neither.
enum class CaseLabel {
    Hypercube,             // no diagonal position, any codim
    DiagRow,               // codim 2: diagonal + upper on its row
    DiagCol,               // codim 2: diagonal + upper on its hook column
    DiagDetached,          // codim 2: diagonal + detached upper
    DiagDiag,              // codim 2: two diagonals
    DiagDetachedDetached,  // codim 3 shapes follow the same naming
    DiagRowDetached,
    DiagColDetached,
    DiagRowRow,
    DiagRowCol,
    DiagColCol,
    DiagDiagDetached,
    DiagDiagRow,
    DiagDiagCol,
    DiagDiagBridge,        // upper on the row of one diagonal, column of the other
    TripleDiag,
};

struct CaseTag {
    int codim = 0;
    CaseLabel label = CaseLabel::Hypercube;

    bool operator==(const CaseTag&) const = default;
};

std::string to_string(CaseLabel label);

AlphaValue alpha_codim01(int codim);

// 1/4 + (1/12)(m12/m11 + m12/m22) on a feasible-cone matrix of dot
// products. Throws ZeroDiagonal on a vanishing diagonal entry.
AlphaValue alpha_codim2(const RatMat& m);

// 1/8 + (1/24) sum of m_ij/m_ii over the three off-diagonal slots, both
// denominators each.
AlphaValue alpha_codim3(const RatMat& m);

// Faces avoiding every diagonal position behave like hypercube faces:
// 1/2^k for codim k = 0..3.
AlphaValue alpha_hypercube(int k);

// Classifies a codim 2 or 3 support. Throws UnsupportedCodim outside.
CaseTag classify_case(int n, const FaceSupport& s);

// The case's value as a function of n, evaluated exactly. Throws
// CaseUnavailable when the case cannot occur at this n (the four shapes
// needing three distinct hook rows below the last one).
AlphaValue closed_form_alpha(int n, const CaseTag& tag);

// Prototype matrices for each case, rows ordered diagonals first. The
// actual face matrices match these up to a simultaneous row and column
// permutation.
RatMat ncone_template(int n, const CaseTag& tag);
RatMat fcone_template(int n, const CaseTag& tag);

// Dispatch: constants for codim 0 and 1, the hypercube shortcut when no
// diagonal position vanishes, the dot-product formula otherwise. Throws
// UnsupportedCodim past codim 3.
AlphaValue alpha_of_face(int n, const FaceSupport& s);

struct CaseReport {
    CaseTag tag;
    std::size_t count = 0;
    bool mdp_match = true;
    bool alpha_match = true;
    Rat alpha;
};

struct FaceFailure {
    FaceSupport support;
    std::string what;
};

struct TableReport {
    int n = 0;
    bool certificate_ok = false;
    std::size_t vertices_checked = 0;
    std::size_t codim2_faces = 0;
    std::size_t codim3_faces = 0;
    bool inverse_ok = true;
    std::vector<CaseReport> cases;
    std::vector<FaceFailure> failures;

    bool all_pass() const;
};

// Exhaustive check of every codim 2 and 3 face against the case
// prototypes: matrices match up to simultaneous permutation, the two cone
// matrices multiply to the identity, and the closed-form value equals the
// dot-product formula. Runs the vertex unimodularity certificate first.
TableReport verify_tables(int n, int jobs = 1);

struct PositivityReport {
    int n = 0;
    Rat min_codim2;
    std::vector<FaceSupport> min_codim2_faces;
    Rat min_codim3;
    std::vector<FaceSupport> min_codim3_faces;
    bool codim2_formula_match = false;  // against 1/4 - n/(12(n-1))
    bool all_positive = false;
};

PositivityReport positivity_report(int n, int jobs = 1);

}  // namespace tesler
