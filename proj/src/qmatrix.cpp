#include "rmlist/qmatrix.hpp"

#include <algorithm>

namespace rmlist {

uint32_t q_rref(const Field& F, QMat& mat, std::vector<uint32_t>* pivots) {
    uint32_t rank = 0;
    for (uint32_t col = 0; col < mat.cols && rank < mat.rows; ++col) {
        uint32_t sel = rank;
        while (sel < mat.rows && mat.at(sel, col) == 0) ++sel;
        if (sel == mat.rows) continue;
        if (sel != rank) {
            for (uint32_t c = 0; c < mat.cols; ++c) std::swap(mat.at(sel, c), mat.at(rank, c));
        }
        const uint32_t piv_inv = F.q_inv(mat.at(rank, col));
        if (piv_inv != 1) {
            for (uint32_t c = col; c < mat.cols; ++c) mat.at(rank, c) = F.q_mul(mat.at(rank, c), piv_inv);
        }
        for (uint32_t r = 0; r < mat.rows; ++r) {
            if (r == rank) continue;
            const uint32_t f = mat.at(r, col);
            if (!f) continue;
            for (uint32_t c = col; c < mat.cols; ++c) {
                mat.at(r, c) = F.q_sub(mat.at(r, c), F.q_mul(f, mat.at(rank, c)));
            }
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

uint32_t q_rank(const Field& F, QMat mat) { return q_rref(F, mat); }

QMat q_nullspace(const Field& F, QMat mat) {
    std::vector<uint32_t> pivots;
    const uint32_t rank = q_rref(F, mat, &pivots);
    std::vector<bool> is_pivot(mat.cols, false);
    for (uint32_t c : pivots) is_pivot[c] = true;
    QMat out(mat.cols - rank, mat.cols);
    uint32_t row = 0;
    for (uint32_t free = 0; free < mat.cols; ++free) {
        if (is_pivot[free]) continue;
        out.at(row, free) = 1;
        for (uint32_t r = 0; r < rank; ++r) {
            const uint32_t c = mat.at(r, free);
            if (c) out.at(row, pivots[r]) = F.q_neg(c);
        }
        ++row;
    }
    q_rref(F, out);  // canonical form
    return out;
}

QMat q_rowspace(const Field& F, QMat mat) {
    const uint32_t rank = q_rref(F, mat);
    QMat out(rank, mat.cols);
    std::copy(mat.a.begin(), mat.a.begin() + static_cast<size_t>(rank) * mat.cols, out.a.begin());
    return out;
}

void for_each_rref(const Field& F, uint32_t n, uint32_t r,
                   const std::function<void(const QMat&)>& visit) {
    if (r > n) return;
    if (r == 0) {
        visit(QMat(0, n));
        return;
    }
    const uint32_t q = static_cast<uint32_t>(F.q());
    // iterate pivot-column combinations in lexicographic order
    std::vector<uint32_t> piv(r);
    for (uint32_t i = 0; i < r; ++i) piv[i] = i;
    for (;;) {
        // free slots: (row i, col j) with j > piv[i] and j not a pivot column
        std::vector<bool> is_pivot(n, false);
        for (uint32_t c : piv) is_pivot[c] = true;
        std::vector<std::pair<uint32_t, uint32_t>> slots;
        for (uint32_t i = 0; i < r; ++i) {
            for (uint32_t j = piv[i] + 1; j < n; ++j) {
                if (!is_pivot[j]) slots.emplace_back(i, j);
            }
        }
        QMat mat(r, n);
        for (uint32_t i = 0; i < r; ++i) mat.at(i, piv[i]) = 1;
        std::vector<uint32_t> counter(slots.size(), 0);
        for (;;) {
            visit(mat);
            size_t k = 0;
            while (k < slots.size()) {
                auto [i, j] = slots[k];
                if (++counter[k] < q) {
                    mat.at(i, j) = counter[k];
                    break;
                }
                counter[k] = 0;
                mat.at(i, j) = 0;
                ++k;
            }
            if (k == slots.size()) break;
        }
        // next pivot combination
        int64_t t = static_cast<int64_t>(r) - 1;
        while (t >= 0 && piv[static_cast<size_t>(t)] == n - r + static_cast<uint32_t>(t)) --t;
        if (t < 0) break;
        ++piv[static_cast<size_t>(t)];
        for (uint32_t i = static_cast<uint32_t>(t) + 1; i < r; ++i) piv[i] = piv[i - 1] + 1;
    }
}

}  // namespace rmlist
