#include "rmlist/sigma_poly.hpp"

#include <algorithm>
#include <numeric>

namespace rmlist {

// --- FqSubspace ---------------------------------------------------------------

FqSubspace FqSubspace::span_of(const Field& F, std::span<const FieldElement> elems) {
    QMat mat(static_cast<uint32_t>(elems.size()), F.m());
    for (uint32_t r = 0; r < elems.size(); ++r) F.qcoords(elems[r], mat.row(r));
    return FqSubspace(F, q_rowspace(F, std::move(mat)));
}

FqSubspace FqSubspace::from_rref(const Field& F, QMat rref) {
    return FqSubspace(F, q_rowspace(F, std::move(rref)));
}

FqSubspace FqSubspace::zero_space(const Field& F) { return FqSubspace(F, QMat(0, F.m())); }

bool FqSubspace::contains(const FieldElement& a) const {
    const Field& F = *f_;
    std::vector<uint32_t> v = F.qcoords(a);
    // reduce v against the RREF basis
    for (uint32_t r = 0; r < basis_.rows; ++r) {
        uint32_t lead = 0;
        while (lead < basis_.cols && basis_.at(r, lead) == 0) ++lead;
        if (lead == basis_.cols) continue;
        const uint32_t c = v[lead];
        if (!c) continue;
        for (uint32_t j = lead; j < basis_.cols; ++j) v[j] = F.q_sub(v[j], F.q_mul(c, basis_.at(r, j)));
    }
    return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

std::vector<FieldElement> FqSubspace::basis_elements() const {
    std::vector<FieldElement> out;
    out.reserve(basis_.rows);
    for (uint32_t r = 0; r < basis_.rows; ++r) {
        out.push_back(f_->from_qcoords(std::span<const uint32_t>(basis_.row(r), basis_.cols)));
    }
    return out;
}

std::vector<FieldElement> FqSubspace::elements() const {
    const Field& F = *f_;
    std::vector<FieldElement> out;
    out.push_back(F.zero());
    for (const FieldElement& b : basis_elements()) {
        const size_t cur = out.size();
        for (uint32_t u = 1; u < F.q(); ++u) {
            FieldElement ub = F.mul(F.q_elem(u), b);
            for (size_t i = 0; i < cur; ++i) out.push_back(F.add(out[i], ub));
        }
    }
    return out;
}

uint32_t FqSubspace::intersection_dim(const FqSubspace& other) const {
    QMat stacked(basis_.rows + other.basis_.rows, basis_.cols);
    std::copy(basis_.a.begin(), basis_.a.end(), stacked.a.begin());
    std::copy(other.basis_.a.begin(), other.basis_.a.end(), stacked.a.begin() + basis_.a.size());
    const uint32_t sum_dim = q_rank(*f_, std::move(stacked));
    return dim() + other.dim() - sum_dim;
}

FqSubspace FqSubspace::scaled(const FieldElement& alpha) const {
    const Field& F = *f_;
    if (F.is_zero(alpha)) throw ZeroScalar("cannot scale a subspace by zero");
    std::vector<FieldElement> imgs;
    imgs.reserve(basis_.rows);
    for (const FieldElement& b : basis_elements()) imgs.push_back(F.mul(alpha, b));
    return span_of(F, imgs);
}

// --- SigmaPoly ------------------------------------------------------------------

void SigmaPoly::trim() {
    while (!c_.empty() && f_->is_zero(c_.back())) c_.pop_back();
}

SigmaPoly SigmaPoly::zero(const Field& F) { return SigmaPoly(F, {}); }

SigmaPoly SigmaPoly::identity(const Field& F) { return SigmaPoly(F, {F.one()}); }

SigmaPoly SigmaPoly::monomial(const Field& F, uint32_t i, const FieldElement& coeff) {
    std::vector<FieldElement> c(static_cast<size_t>(i % F.m()) + 1, F.zero());
    c.back() = coeff;
    SigmaPoly out(F, std::move(c));
    out.trim();
    return out;
}

SigmaPoly SigmaPoly::from_coeffs(const Field& F, std::vector<FieldElement> coeffs) {
    std::vector<FieldElement> red(F.m(), F.zero());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        size_t slot = i % F.m();
        red[slot] = F.add(red[slot], coeffs[i]);
    }
    SigmaPoly out(F, std::move(red));
    out.trim();
    return out;
}

bool SigmaPoly::is_monic() const { return !c_.empty() && c_.back() == f_->one(); }

FieldElement SigmaPoly::coeff(uint32_t i) const {
    if (i < c_.size()) return c_[i];
    return f_->zero();
}

std::vector<uint32_t> SigmaPoly::support() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < c_.size(); ++i) {
        if (!f_->is_zero(c_[i])) out.push_back(i);
    }
    return out;
}

FieldElement SigmaPoly::operator()(const FieldElement& x) const {
    const Field& F = *f_;
    FieldElement acc = F.zero();
    FieldElement fx = x;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!F.is_zero(c_[i])) acc = F.add(acc, F.mul(c_[i], fx));
        if (i + 1 < c_.size()) fx = F.frobenius(fx, 1);
    }
    return acc;
}

SigmaPoly SigmaPoly::operator+(const SigmaPoly& o) const {
    const Field& F = *f_;
    std::vector<FieldElement> c(std::max(c_.size(), o.c_.size()), F.zero());
    for (size_t i = 0; i < c.size(); ++i) {
        FieldElement lhs = i < c_.size() ? c_[i] : F.zero();
        FieldElement rhs = i < o.c_.size() ? o.c_[i] : F.zero();
        c[i] = F.add(lhs, rhs);
    }
    SigmaPoly out(F, std::move(c));
    out.trim();
    return out;
}

SigmaPoly SigmaPoly::operator-(const SigmaPoly& o) const { return *this + (-o); }

SigmaPoly SigmaPoly::operator-() const {
    const Field& F = *f_;
    std::vector<FieldElement> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = F.neg(c_[i]);
    return SigmaPoly(F, std::move(c));
}

SigmaPoly SigmaPoly::scaled(const FieldElement& c) const {
    const Field& F = *f_;
    std::vector<FieldElement> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = F.mul(c, c_[i]);
    SigmaPoly r(F, std::move(out));
    r.trim();
    return r;
}

SigmaPoly SigmaPoly::compose(const SigmaPoly& g) const {
    const Field& F = *f_;
    std::vector<FieldElement> out(F.m(), F.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (F.is_zero(c_[i])) continue;
        for (size_t j = 0; j < g.c_.size(); ++j) {
            if (F.is_zero(g.c_[j])) continue;
            size_t slot = (i + j) % F.m();
            out[slot] = F.add(out[slot], F.mul(c_[i], F.frobenius(g.c_[j], static_cast<int64_t>(i))));
        }
    }
    SigmaPoly r(F, std::move(out));
    r.trim();
    return r;
}

SigmaPoly SigmaPoly::shift_pre(uint32_t j) const {
    const Field& F = *f_;
    std::vector<FieldElement> out(F.m(), F.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        size_t slot = (i + j) % F.m();
        out[slot] = F.add(out[slot], c_[i]);
    }
    SigmaPoly r(F, std::move(out));
    r.trim();
    return r;
}

SigmaPoly SigmaPoly::shift_post(uint32_t j) const {
    const Field& F = *f_;
    std::vector<FieldElement> out(F.m(), F.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        size_t slot = (i + j) % F.m();
        out[slot] = F.add(out[slot], F.frobenius(c_[i], j));
    }
    SigmaPoly r(F, std::move(out));
    r.trim();
    return r;
}

std::vector<uint32_t> SigmaPoly::key() const {
    const Field& F = *f_;
    std::vector<uint32_t> out;
    out.reserve(c_.size() * F.prime_degree() + 1);
    out.push_back(static_cast<uint32_t>(c_.size()));
    for (size_t i = c_.size(); i-- > 0;) {
        for (uint32_t k = F.prime_degree(); k-- > 0;) out.push_back(c_[i][k]);
    }
    return out;
}

bool SigmaPoly::canonical_less(const SigmaPoly& o) const { return key() < o.key(); }

// --- free operations ---------------------------------------------------------------

SigmaPoly adjoint(const SigmaPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("adjoint of the zero polynomial");
    const Field& F = f.field();
    const uint32_t m = F.m();
    std::vector<FieldElement> out(m, F.zero());
    const auto& c = f.coeffs();
    for (uint32_t i = 0; i < c.size(); ++i) {
        if (F.is_zero(c[i])) continue;
        uint32_t slot = (m - i) % m;
        out[slot] = F.add(out[slot], F.frobenius(c[i], static_cast<int64_t>(m) - i));
    }
    return SigmaPoly::from_coeffs(F, std::move(out));
}

SigmaPoly shifted_adjoint(const SigmaPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("shifted adjoint of the zero polynomial");
    const Field& F = f.field();
    const uint32_t k = static_cast<uint32_t>(f.degree());
    std::vector<FieldElement> out(k + 1, F.zero());
    for (uint32_t i = 0; i <= k; ++i) out[i] = F.frobenius(f.coeff(k - i), i);
    return SigmaPoly::from_coeffs(F, std::move(out));
}

FqSubspace kernel(const SigmaPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("kernel of the zero polynomial is everything");
    const Field& F = f.field();
    const uint32_t m = F.m();
    // columns: qcoords of f(x^i) for the GF(q)-basis (1, x, ..., x^{m-1})
    QMat mat(m, m);
    FieldElement xi = F.one();
    std::vector<uint32_t> col(m);
    for (uint32_t i = 0; i < m; ++i) {
        F.qcoords(f(xi), col.data());
        for (uint32_t r = 0; r < m; ++r) mat.at(r, i) = col[r];
        xi = F.mul(xi, F.x());
    }
    return FqSubspace::from_rref(F, q_nullspace(F, std::move(mat)));
}

uint32_t rank(const SigmaPoly& f) {
    if (f.is_zero()) return 0;
    return f.field().m() - kernel(f).dim();
}

SigmaPoly moore_subspace_poly(const Field& F, std::span<const FieldElement> basis) {
    // incremental construction: extend the monic max-kernel polynomial one
    // basis vector at a time
    SigmaPoly s = SigmaPoly::identity(F);
    for (const FieldElement& u : basis) {
        FieldElement v = s(u);
        if (F.is_zero(v)) throw DependentBasis("basis elements are GF(q)-dependent");
        // s <- s^sigma - (v^sigma / v) s
        SigmaPoly shifted = s.shift_post(1);
        FieldElement c = F.div(F.frobenius(v, 1), v);
        s = shifted - s.scaled(c);
    }
    return s;
}

SigmaPoly moore_subspace_poly(const FqSubspace& U) {
    auto basis = U.basis_elements();
    return moore_subspace_poly(U.field(), basis);
}

bool is_subspace_poly(const SigmaPoly& f) {
    if (f.is_zero() || !f.is_monic()) return false;
    return kernel(f).dim() == static_cast<uint32_t>(f.degree());
}

SigmaPoly trace_poly(const Field& F, uint32_t r) {
    if (r == 0 || F.m() % r != 0) throw NonDivisorDegree("trace level must divide m");
    const uint32_t m = F.m();
    // q^{ir}-power terms: solve s*j = i*r (mod m) for the sigma-exponent j
    uint32_t s_inv = 0;
    for (uint32_t cand = 0; cand < m; ++cand) {
        if ((static_cast<uint64_t>(cand) * F.s()) % m == 1 % m) {
            s_inv = cand;
            break;
        }
    }
    std::vector<FieldElement> coeffs(m, F.zero());
    for (uint32_t i = 0; i < m / r; ++i) {
        uint32_t j = static_cast<uint32_t>((static_cast<uint64_t>(i) * r % m) * s_inv % m);
        coeffs[j] = F.add(coeffs[j], F.one());
    }
    return SigmaPoly::from_coeffs(F, std::move(coeffs));
}

}  // namespace rmlist
