#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rmlist/gf.hpp"

namespace rmlist {

/// Dense matrix over GF(q), entries stored as GF(q)-indices (see Field's
/// q-layer), row-major.
struct QMat {
    uint32_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    QMat() = default;
    QMat(uint32_t r, uint32_t c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint32_t& at(uint32_t r, uint32_t c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint32_t at(uint32_t r, uint32_t c) const { return a[static_cast<size_t>(r) * cols + c]; }
    uint32_t* row(uint32_t r) { return a.data() + static_cast<size_t>(r) * cols; }
    const uint32_t* row(uint32_t r) const { return a.data() + static_cast<size_t>(r) * cols; }

    bool operator==(const QMat&) const = default;
    auto operator<=>(const QMat&) const = default;
};

/// In-place reduced row echelon form; returns the rank.  Pivot columns are
/// appended to *pivots when given.
uint32_t q_rref(const Field& F, QMat& mat, std::vector<uint32_t>* pivots = nullptr);

uint32_t q_rank(const Field& F, QMat mat);

/// RREF basis of {v : mat * v = 0}, one row per basis vector.
QMat q_nullspace(const Field& F, QMat mat);

/// Drops zero rows and returns the canonical RREF row space of mat.
QMat q_rowspace(const Field& F, QMat mat);

/// Visits every r-dimensional subspace of GF(q)^n exactly once, as its
/// canonical RREF basis matrix, in a deterministic order (pivot patterns in
/// lexicographic order, free entries counting up).  The visit count equals
/// the Gaussian binomial [n r]_q.
void for_each_rref(const Field& F, uint32_t n, uint32_t r,
                   const std::function<void(const QMat&)>& visit);

}  // namespace rmlist
