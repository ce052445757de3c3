#include "rmlist/pmatrix.hpp"

#include <algorithm>

#include "rmlist/errors.hpp"
#include "rmlist/kernels.hpp"

namespace rmlist {

uint32_t p_inverse_scalar(uint32_t a, uint32_t p) {
    uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t p_rref(PMat& mat, uint32_t p, std::vector<uint32_t>* pivots) {
    uint32_t rank = 0;
    for (uint32_t col = 0; col < mat.cols && rank < mat.rows; ++col) {
        uint32_t sel = rank;
        while (sel < mat.rows && mat.at(sel, col) == 0) ++sel;
        if (sel == mat.rows) continue;
        if (sel != rank) {
            for (uint32_t c = 0; c < mat.cols; ++c) std::swap(mat.at(sel, c), mat.at(rank, c));
        }
        uint32_t inv = p_inverse_scalar(mat.at(rank, col), p);
        if (inv != 1) kernels::scale_mod(mat.row(rank), mat.row(rank), inv, mat.cols, p);
        for (uint32_t r = 0; r < mat.rows; ++r) {
            if (r == rank) continue;
            uint32_t f = mat.at(r, col);
            if (f) kernels::axpy_mod(mat.row(r), mat.row(rank), p - f, mat.cols, p);
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

std::vector<std::vector<uint32_t>> p_nullspace(PMat mat, uint32_t p) {
    std::vector<uint32_t> pivots;
    uint32_t rank = p_rref(mat, p, &pivots);
    std::vector<bool> is_pivot(mat.cols, false);
    for (uint32_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (uint32_t free = 0; free < mat.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(mat.cols, 0);
        v[free] = 1;
        for (uint32_t r = 0; r < rank; ++r) {
            uint32_t c = mat.at(r, free);
            if (c) v[pivots[r]] = p - c;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<uint32_t> p_invert_cols(const std::vector<uint32_t>& cols, uint32_t e, uint32_t p) {
    PMat aug(e, 2 * e);
    for (uint32_t r = 0; r < e; ++r) {
        for (uint32_t c = 0; c < e; ++c) aug.at(r, c) = cols[static_cast<size_t>(c) * e + r];
        aug.at(r, e + r) = 1;
    }
    if (p_rref(aug, p) != e) throw Error("internal: singular matrix inversion");
    std::vector<uint32_t> out(static_cast<size_t>(e) * e);
    for (uint32_t r = 0; r < e; ++r)
        for (uint32_t c = 0; c < e; ++c) out[static_cast<size_t>(c) * e + r] = aug.at(r, e + c);
    return out;
}

bool p_reduce_against_rref(const PMat& rref, const std::vector<uint32_t>& pivots, uint32_t p,
                           uint32_t* v) {
    for (uint32_t r = 0; r < pivots.size(); ++r) {
        uint32_t c = v[pivots[r]];
        if (c) kernels::axpy_mod(v, rref.row(r), p - c, rref.cols, p);
    }
    for (uint32_t c = 0; c < rref.cols; ++c)
        if (v[c]) return false;
    return true;
}

}  // namespace rmlist
