#pragma once

#include <span>
#include <vector>

#include "rmlist/gf.hpp"
#include "rmlist/qmatrix.hpp"

namespace rmlist {

/// GF(q)-subspace of GF(q^m), canonicalized to the reduced row-echelon basis
/// of its GF(q)-coordinate rows (so equality of subspaces is equality of
/// representations).
class FqSubspace {
   public:
    static FqSubspace span_of(const Field& F, std::span<const FieldElement> elems);
    static FqSubspace from_rref(const Field& F, QMat rref);
    static FqSubspace zero_space(const Field& F);

    const Field& field() const { return *f_; }
    uint32_t dim() const { return basis_.rows; }
    uint32_t ambient_dim() const { return basis_.cols; }
    const QMat& basis_matrix() const { return basis_; }

    bool contains(const FieldElement& a) const;
    std::vector<FieldElement> basis_elements() const;
    /// All q^dim elements (enumeration order: GF(q)-digit counter over the
    /// basis rows, not sorted).
    std::vector<FieldElement> elements() const;
    uint32_t intersection_dim(const FqSubspace& other) const;
    /// alpha * U for alpha != 0.
    FqSubspace scaled(const FieldElement& alpha) const;

    bool operator==(const FqSubspace& o) const { return basis_ == o.basis_; }
    auto operator<=>(const FqSubspace& o) const { return basis_ <=> o.basis_; }

   private:
    FqSubspace(const Field& F, QMat b) : f_(&F), basis_(std::move(b)) {}
    const Field* f_ = nullptr;
    QMat basis_;
};

/// sigma-linearized polynomial sum a_i x^{sigma^i} over GF(q^m), kept reduced
/// modulo x^{sigma^m} - x (so at most m coefficients) with trailing zeros
/// trimmed.  Acts on GF(q^m) as a GF(q)-linear map.
class SigmaPoly {
   public:
    static SigmaPoly zero(const Field& F);
    static SigmaPoly identity(const Field& F);  // x
    static SigmaPoly monomial(const Field& F, uint32_t i, const FieldElement& coeff);
    static SigmaPoly from_coeffs(const Field& F, std::vector<FieldElement> coeffs);

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    /// sigma-degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_monic() const;
    FieldElement coeff(uint32_t i) const;  // zero element when i exceeds the degree
    const std::vector<FieldElement>& coeffs() const { return c_; }
    std::vector<uint32_t> support() const;

    FieldElement operator()(const FieldElement& x) const;

    SigmaPoly operator+(const SigmaPoly& o) const;
    SigmaPoly operator-(const SigmaPoly& o) const;
    SigmaPoly operator-() const;
    /// c * f (left scalar multiple).
    SigmaPoly scaled(const FieldElement& c) const;
    /// f composed with g: (f o g)(x) = f(g(x)), reduced.
    SigmaPoly compose(const SigmaPoly& g) const;
    /// f(x^{sigma^j}): support shifts up by j, coefficients unchanged.
    SigmaPoly shift_pre(uint32_t j) const;
    /// (f(x))^{sigma^j}: support shifts up by j, coefficients twisted.
    SigmaPoly shift_post(uint32_t j) const;

    bool operator==(const SigmaPoly& o) const { return c_ == o.c_; }
    /// Flat coordinate key (degree-major) for canonical ordering and dedup.
    std::vector<uint32_t> key() const;
    bool canonical_less(const SigmaPoly& o) const;

   private:
    SigmaPoly(const Field& F, std::vector<FieldElement> c) : f_(&F), c_(std::move(c)) {}
    void trim();
    const Field* f_ = nullptr;
    std::vector<FieldElement> c_;
};

/// Adjoint with respect to the trace bilinear form: coefficient a_i moves to
/// position m-i twisted by sigma^{m-i}; preserves kernel dimension.
SigmaPoly adjoint(const SigmaPoly& f);

/// (adjoint(f))^{sigma^k} for k = deg f: sum (a_{k-i} x)^{sigma^i}; same
/// kernel dimension as f.
SigmaPoly shifted_adjoint(const SigmaPoly& f);

/// Kernel {c : f(c) = 0} via the m x m matrix of the induced GF(q)-linear map
/// in the basis (1, x, ..., x^{m-1}).  Throws ZeroPolynomial on f = 0.
FqSubspace kernel(const SigmaPoly& f);
uint32_t rank(const SigmaPoly& f);

/// Monic polynomial of sigma-degree dim(U) whose kernel is exactly U.
SigmaPoly moore_subspace_poly(const FqSubspace& U);
/// Same from a raw basis; throws DependentBasis on dependent input.
SigmaPoly moore_subspace_poly(const Field& F, std::span<const FieldElement> basis);

/// Monic with maximum kernel: dim ker(f) == deg_sigma(f).
bool is_subspace_poly(const SigmaPoly& f);

/// Tr_{q^m / q^r} as a sigma-polynomial of this field (r | m).
SigmaPoly trace_poly(const Field& F, uint32_t r);

}  // namespace rmlist
