#include "rmlist/lift.hpp"

#include <algorithm>

namespace rmlist {

SubspaceCodeword::SubspaceCodeword(const Field& F, QMat rref_basis)
    : f_(&F), basis_(q_rowspace(F, std::move(rref_basis))) {}

SubspaceCodeword lift(const Field& F, std::span<const FieldElement> word) {
    const uint32_t n = static_cast<uint32_t>(word.size());
    const uint32_t m = F.m();
    if (n == 0) throw DimensionMismatch("cannot lift an empty word");
    QMat mat(n, n + m);
    std::vector<uint32_t> qc(m);
    for (uint32_t i = 0; i < n; ++i) {
        if (word[i].size() != F.prime_degree())
            throw DimensionMismatch("word entry does not belong to this field");
        mat.at(i, i) = 1;  // identity block
        F.qcoords(word[i], qc.data());
        for (uint32_t c = 0; c < m; ++c) mat.at(i, n + c) = qc[c];
    }
    return SubspaceCodeword(F, std::move(mat));
}

uint32_t subspace_distance(const SubspaceCodeword& u, const SubspaceCodeword& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw AmbientMismatch("subspace distance needs a common ambient space");
    const Field& F = u.field();
    const QMat& a = u.basis_matrix();
    const QMat& b = v.basis_matrix();
    QMat stacked(a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), stacked.a.begin());
    std::copy(b.a.begin(), b.a.end(), stacked.a.begin() + a.a.size());
    const uint32_t sum_dim = q_rank(F, std::move(stacked));
    // dim U + dim V - 2 dim(U cap V) = 2 dim(U+V) - dim U - dim V
    return 2 * sum_dim - a.rows - b.rows;
}

LiftedCodeParams lift_code(const EvalCode& code, const Big& budget) {
    const Field& F = code.field();
    if (code.size() <= 1)
        throw ParamViolation("lifted parameters undefined: fewer than two codewords");
    if (code.size() * code.size() > budget)
        throw BudgetExceeded("pairwise lifted distance scan exceeds the budget");
    std::vector<SubspaceCodeword> lifted;
    std::vector<std::vector<FieldElement>> words;
    code.for_each_codeword([&](const uint32_t* flat) {
        auto word = code.unflatten(flat);
        lifted.push_back(lift(F, word));
        words.push_back(std::move(word));
    });
    LiftedCodeParams out;
    out.ambient = code.n() + F.m();
    out.size = code.size();
    out.dim = code.n();
    uint32_t min_ds = UINT32_MAX;
    bool law = true;
    for (size_t i = 0; i < lifted.size(); ++i) {
        for (size_t k = i + 1; k < lifted.size(); ++k) {
            uint32_t ds = subspace_distance(lifted[i], lifted[k]);
            min_ds = std::min(min_ds, ds);
            if (ds != 2 * rank_distance(F, words[i], words[k])) law = false;
        }
    }
    out.ds = min_ds;
    out.distance_law_verified = law;
    return out;
}

LiftBallResult verify_lift_ball(const EvalCode& code, const WitnessReport& report) {
    const Field& F = code.field();
    LiftBallResult res;
    res.subspace_radius = 2 * report.radius;
    SubspaceCodeword lw = lift(F, report.w);
    res.ok = true;
    for (const auto& word : report.list) {
        if (subspace_distance(lift(F, word), lw) > res.subspace_radius) {
            res.ok = false;
            break;
        }
    }
    res.lifted_list_bound = res.ok ? Big(report.list.size()) : Big(0);
    return res;
}

}  // namespace rmlist
