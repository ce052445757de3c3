#pragma once

#include <cstdint>
#include <vector>

namespace rmlist {

/// Dense matrix of residues mod a prime p, row-major.  Row operations go
/// through the vector kernels.
struct PMat {
    uint32_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    PMat() = default;
    PMat(uint32_t r, uint32_t c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint32_t& at(uint32_t r, uint32_t c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint32_t at(uint32_t r, uint32_t c) const { return a[static_cast<size_t>(r) * cols + c]; }
    uint32_t* row(uint32_t r) { return a.data() + static_cast<size_t>(r) * cols; }
    const uint32_t* row(uint32_t r) const { return a.data() + static_cast<size_t>(r) * cols; }
};

uint32_t p_inverse_scalar(uint32_t a, uint32_t p);

/// In-place RREF; returns rank, appends pivot columns to *pivots if given.
uint32_t p_rref(PMat& mat, uint32_t p, std::vector<uint32_t>* pivots = nullptr);

/// Basis of {v : mat v = 0}, one row per vector.
std::vector<std::vector<uint32_t>> p_nullspace(PMat mat, uint32_t p);

/// Inverse of a square matrix given column-major, returned column-major.
std::vector<uint32_t> p_invert_cols(const std::vector<uint32_t>& cols, uint32_t e, uint32_t p);

/// Reduces v against an RREF matrix in place; returns true when v lands in
/// the row space (i.e. reduces to zero).
bool p_reduce_against_rref(const PMat& rref, const std::vector<uint32_t>& pivots, uint32_t p,
                           uint32_t* v);

}  // namespace rmlist
