#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rmlist/bigmath.hpp"
#include "rmlist/errors.hpp"

namespace rmlist {

// Desk-scale guards: q^m <= 2^20, hence the prime-field degree e = m*ell <= 20.
inline constexpr uint64_t kDeskScaleFieldLimit = uint64_t{1} << 20;
inline constexpr uint32_t kMaxPrimeDegree = 20;

/// Element of GF(p^e) in canonical form: e residues mod p, coordinates with
/// respect to the power basis of the defining modulus, constant term first.
class FieldElement {
   public:
    FieldElement() = default;
    explicit FieldElement(size_t n) : n_(static_cast<uint8_t>(n)) {}

    size_t size() const { return n_; }
    uint32_t operator[](size_t i) const { return c_[i]; }
    uint32_t& operator[](size_t i) { return c_[i]; }
    const uint32_t* data() const { return c_.data(); }
    uint32_t* data() { return c_.data(); }

    std::vector<uint32_t> coords() const { return {c_.begin(), c_.begin() + n_}; }

    bool operator==(const FieldElement& o) const {
        if (n_ != o.n_) return false;
        for (size_t i = 0; i < n_; ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }

    // Orders elements by their canonical index (base-p value, constant term
    // least significant); independent of p since digits compare positionally.
    std::strong_ordering operator<=>(const FieldElement& o) const {
        if (n_ != o.n_) return n_ <=> o.n_;
        for (size_t i = n_; i-- > 0;) {
            if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
        }
        return std::strong_ordering::equal;
    }

   private:
    std::array<uint32_t, kMaxPrimeDegree> c_{};
    uint8_t n_ = 0;
};

struct FieldParams {
    uint32_t p = 2;
    uint32_t ell = 1;
    uint32_t m = 2;
    uint32_t s = 1;
    std::vector<uint32_t> modulus;  // low-to-high over GF(p), degree m*ell, monic

    bool operator==(const FieldParams&) const = default;
};

/// The field tower GF(p) <= GF(q) <= GF(q^m), q = p^ell, realized as
/// GF(p)[x]/(modulus) with deg(modulus) = m*ell.  sigma is x -> x^{q^s},
/// gcd(s, m) = 1, a generator of Gal(GF(q^m)/GF(q)).
///
/// All operations are const and thread-safe; lazily built tables are guarded
/// internally.  Elements are plain values and do not reference the field;
/// using an element with a field of a different prime degree throws
/// FieldMismatch.
class Field {
   public:
    // Canonical modulus: smallest monic irreducible of degree m*ell over
    // GF(p), where candidates are ordered by their non-leading coefficient
    // vector read as a base-p integer (constant term least significant).
    Field(uint32_t p, uint32_t ell, uint32_t m, uint32_t s);
    explicit Field(const FieldParams& params);
    ~Field();

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    uint32_t characteristic() const { return p_; }
    uint32_t ell() const { return ell_; }
    uint32_t m() const { return m_; }
    uint32_t s() const { return s_; }
    uint32_t prime_degree() const { return e_; }  // e = m*ell
    uint64_t q() const { return q_; }
    uint64_t size() const { return size_; }  // q^m = p^e
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    FieldParams params() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement x() const;  // residue class of the modulus variable
    FieldElement from_int(uint64_t residue) const;
    FieldElement from_coords(std::span<const uint32_t> coords) const;
    FieldElement from_index(uint64_t index) const;
    uint64_t index_of(const FieldElement& a) const;
    const FieldElement& multiplicative_generator() const;

    bool is_zero(const FieldElement& a) const;
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(const FieldElement& a, int64_t exp) const;
    FieldElement pow(const FieldElement& a, const Big& exp) const;

    /// a^{sigma^i} = a^{q^{(s*i mod m)}}
    FieldElement frobenius(const FieldElement& a, int64_t i) const;
    /// a^{q^j}
    FieldElement frobenius_q(const FieldElement& a, int64_t j) const;
    /// a^{p^j}
    FieldElement frobenius_p(const FieldElement& a, int64_t j) const;

    /// a in GF(q^n)?  Requires n | m.
    bool in_subfield(const FieldElement& a, uint32_t n) const;

    /// Trace / norm from GF(q^n) down to GF(q^r); requires r | n, n | m and
    /// a in the GF(q^n) level.
    FieldElement rel_trace(const FieldElement& a, uint32_t n, uint32_t r) const;
    FieldElement rel_norm(const FieldElement& a, uint32_t n, uint32_t r) const;
    FieldElement rel_trace(const FieldElement& a, uint32_t r) const { return rel_trace(a, m_, r); }
    FieldElement rel_norm(const FieldElement& a, uint32_t r) const { return rel_norm(a, m_, r); }

    /// Canonical GF(q)-basis of the subfield GF(q^n) (RREF rows), n | m.
    const std::vector<FieldElement>& subfield_basis(uint32_t n) const;
    /// All q^n elements of GF(q^n), sorted in canonical element order.
    std::vector<FieldElement> subfield_elements(uint32_t n) const;

    // GF(q)-index layer: elements of GF(q) carry indices 0..q-1 in canonical
    // element order (0 -> 0, 1 -> 1).  Backs all GF(q)-linear algebra.
    uint32_t q_add(uint32_t u, uint32_t v) const;
    uint32_t q_sub(uint32_t u, uint32_t v) const;
    uint32_t q_mul(uint32_t u, uint32_t v) const;
    uint32_t q_neg(uint32_t u) const;
    uint32_t q_inv(uint32_t u) const;
    const FieldElement& q_elem(uint32_t idx) const;
    uint32_t q_index(const FieldElement& a) const;  // a must lie in GF(q)

    /// Coordinates of a with respect to the GF(q)-basis (1, x, ..., x^{m-1}),
    /// as m GF(q)-indices.
    void qcoords(const FieldElement& a, uint32_t* out) const;
    std::vector<uint32_t> qcoords(const FieldElement& a) const;
    void qcoords_raw(const uint32_t* coords, uint32_t* out) const;
    FieldElement from_qcoords(std::span<const uint32_t> idx) const;

   private:
    struct Tables;

    void init(std::vector<uint32_t> modulus_or_empty);
    void check(const FieldElement& a) const;
    FieldElement matvec(const std::vector<uint32_t>& cols, const FieldElement& a) const;
    const Tables& tables() const;

    uint32_t p_ = 0, ell_ = 0, m_ = 0, s_ = 0, e_ = 0;
    uint64_t q_ = 0, size_ = 0;
    std::vector<uint32_t> modulus_;
    // reduction rows: coords of x^{e+k} mod modulus, k in [0, e-1)
    std::vector<std::vector<uint32_t>> red_;
    // frob_[j]: column-major e x e matrix of a -> a^{p^j}
    std::vector<std::vector<uint32_t>> frob_;
    std::unique_ptr<Tables> tables_;
};

/// Formal integer combination of sigma-powers: sum of coeff * sigma^power,
/// evaluated as coeff * q^{s*power} over arbitrary-precision integers.
struct SigmaPower {
    int64_t coeff = 0;
    uint64_t power = 0;
};

/// Evaluates num/den as exact integers and reduces modulo q^n - 1 (the order
/// of GF(q^n)^*).  An empty denominator means 1.  Throws NonIntegerExponent
/// when the division leaves a remainder, ParamViolation for a zero
/// denominator (unless the numerator is zero, which yields 0).
uint64_t exponent_reduce(const Field& F, uint32_t n, std::span<const SigmaPower> num,
                         std::span<const SigmaPower> den = {});

}  // namespace rmlist
