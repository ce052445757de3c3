#pragma once

#include <span>
#include <vector>

#include "rmlist/codes.hpp"
#include "rmlist/witness.hpp"

namespace rmlist {

/// n-dimensional subspace of GF(q)^{n+m} in canonical RREF basis form.  For
/// lifted words the left n x n block is the identity.
class SubspaceCodeword {
   public:
    SubspaceCodeword(const Field& F, QMat rref_basis);

    const Field& field() const { return *f_; }
    uint32_t ambient_dim() const { return basis_.cols; }
    uint32_t dim() const { return basis_.rows; }
    const QMat& basis_matrix() const { return basis_; }

    bool operator==(const SubspaceCodeword& o) const { return basis_ == o.basis_; }

   private:
    const Field* f_;
    QMat basis_;
};

/// Lifting X -> rowspace [I_n | X]: the word w in GF(q^m)^n is read as the
/// n x m matrix whose i-th row holds the GF(q)-coordinates of w_i (the
/// transpose view of w as an m x n array over GF(q)).
SubspaceCodeword lift(const Field& F, std::span<const FieldElement> word);

/// dim U + dim V - 2 dim(U cap V), via the rank of the stacked bases.
uint32_t subspace_distance(const SubspaceCodeword& u, const SubspaceCodeword& v);

struct LiftedCodeParams {
    uint32_t ambient = 0;  // n + m
    Big size = 0;          // M_s = M_R
    uint32_t ds = 0;       // 2 d_R
    uint32_t dim = 0;      // n
    bool distance_law_verified = false;  // d_s(lift(A), lift(B)) == 2 rank(A-B) on all pairs
};

/// Lifts the whole code and verifies d_s = 2 d_R by brute force; needs
/// |C|^2 pair checks within budget.
LiftedCodeParams lift_code(const EvalCode& code, const Big& budget);

struct LiftBallResult {
    bool ok = false;
    uint32_t subspace_radius = 0;  // 2 * rank radius
    Big lifted_list_bound = 0;     // the injected list size
};

/// Checks the ball injection for a witness report: every listed codeword's
/// lift stays within subspace distance 2*radius of the lifted witness.
LiftBallResult verify_lift_ball(const EvalCode& code, const WitnessReport& report);

}  // namespace rmlist
