#include "rmlist/codes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rmlist/kernels.hpp"
#include "rmlist/qmatrix.hpp"

namespace rmlist {

// --- additive maps ---------------------------------------------------------------

FieldElement AdditiveMapSpec::apply(const Field& F, const FieldElement& a) const {
    switch (kind) {
        case Kind::Zero: return F.zero();
        case Kind::Identity: return a;
        case Kind::EtaQPow: return F.mul(eta, F.frobenius_q(a, h));
        case Kind::EtaPPow: return F.mul(eta, F.frobenius_p(a, h));
        case Kind::TraceHalf: {
            if (F.m() % 2 != 0) throw ParamViolation("half-trace map needs even m");
            return F.add(a, F.frobenius_q(a, F.m() / 2));
        }
        case Kind::Matrix: {
            const uint32_t e = F.prime_degree();
            if (matrix_cols.size() != static_cast<size_t>(e) * e)
                throw ParamViolation("additive map matrix must be e x e");
            FieldElement r(e);
            for (uint32_t c = 0; c < e; ++c) {
                if (a[c])
                    kernels::axpy_mod(r.data(), &matrix_cols[static_cast<size_t>(c) * e], a[c], e,
                                      F.characteristic());
            }
            return r;
        }
    }
    throw ParamViolation("unknown additive map kind");
}

uint32_t AdditiveMapSpec::image_rank_p(const Field& F) const {
    const uint32_t e = F.prime_degree();
    PMat mat(e, e);
    FieldElement basis(e);
    for (uint32_t c = 0; c < e; ++c) {
        basis.data()[c] = 1;
        FieldElement img = apply(F, basis);
        for (uint32_t r = 0; r < e; ++r) mat.at(r, c) = img[r];
        basis.data()[c] = 0;
    }
    return p_rref(mat, F.characteristic());
}

bool AdditiveMapSpec::is_bijective(const Field& F) const {
    if (kind == Kind::Identity) return true;
    if (kind == Kind::Zero) return false;
    return image_rank_p(F) == F.prime_degree();
}

// --- descriptors ------------------------------------------------------------------

CodeDescriptor CodeDescriptor::gabidulin(uint32_t k) {
    CodeDescriptor d;
    d.kind = Kind::Gabidulin;
    d.k = k;
    return d;
}

CodeDescriptor CodeDescriptor::power_gabidulin(uint32_t h, uint32_t j) {
    CodeDescriptor d;
    d.kind = Kind::PowerGabidulin;
    d.h = h;
    d.j = j;
    return d;
}

CodeDescriptor CodeDescriptor::hf1f2(uint32_t k, AdditiveMapSpec f1, AdditiveMapSpec f2) {
    CodeDescriptor d;
    d.kind = Kind::Hf1f2;
    d.k = k;
    d.f1 = std::move(f1);
    d.f2 = std::move(f2);
    return d;
}

CodeDescriptor CodeDescriptor::twisted_sheekey(uint32_t k, FieldElement eta, uint32_t h) {
    CodeDescriptor d;
    d.kind = Kind::TwistedSheekey;
    d.k = k;
    d.h = h;
    d.eta = std::move(eta);
    return d;
}

CodeDescriptor CodeDescriptor::cj(uint32_t k, uint32_t j_omitted) {
    CodeDescriptor d;
    d.kind = Kind::Cj;
    d.k = k;
    d.j = j_omitted;
    return d;
}

// --- EvalCode ----------------------------------------------------------------------

EvalCode EvalCode::build(const Field& F, CodeDescriptor desc, PointSpec pts) {
    EvalCode code;
    code.f_ = &F;

    // resolve evaluation points
    if (pts.kind == PointSpec::Kind::SubfieldBasis) {
        if (pts.n == 0 || F.m() % pts.n != 0)
            throw ParamViolation("subfield-basis points need a level n dividing m");
        if (F.is_zero(pts.beta)) throw ZeroScalar("subfield-basis scaling beta must be nonzero");
        pts.points.clear();
        for (const auto& b : F.subfield_basis(pts.n)) pts.points.push_back(F.mul(pts.beta, b));
    }
    code.points_ = pts.points;
    code.meta_ = std::move(pts);
    const uint32_t n = static_cast<uint32_t>(code.points_.size());
    if (n < 1 || n > F.m()) throw ParamViolation("need 1 <= n <= m evaluation points");
    {
        QMat coords(n, F.m());
        for (uint32_t i = 0; i < n; ++i) F.qcoords(code.points_[i], coords.row(i));
        if (q_rank(F, std::move(coords)) != n)
            throw DependentPoints("evaluation points are GF(q)-dependent");
    }

    // validate the descriptor and fix the parameterization
    const uint32_t m = F.m();
    switch (desc.kind) {
        case CodeDescriptor::Kind::Gabidulin:
            if (desc.k > m - 1) throw ParamViolation("need k <= m-1");
            for (uint32_t i = 0; i < desc.k; ++i) code.positions_.push_back(i);
            break;
        case CodeDescriptor::Kind::PowerGabidulin:
            if (desc.h < 1 || desc.h + desc.j > m)
                throw ParamViolation("power window [j, j+h-1] must fit below m");
            for (uint32_t i = 0; i < desc.h; ++i) code.positions_.push_back(desc.j + i);
            break;
        case CodeDescriptor::Kind::TwistedSheekey:
            desc.f1 = AdditiveMapSpec{AdditiveMapSpec::Kind::Identity, {}, 0, {}};
            desc.f2 = AdditiveMapSpec{AdditiveMapSpec::Kind::EtaQPow, desc.eta, desc.h, {}};
            if (F.is_zero(desc.eta)) desc.f2.kind = AdditiveMapSpec::Kind::Zero;
            [[fallthrough]];
        case CodeDescriptor::Kind::Hf1f2: {
            if (desc.k < 1 || desc.k > m - 1) throw ParamViolation("need 1 <= k <= m-1");
            uint32_t r1 = desc.f1.image_rank_p(F), r2 = desc.f2.image_rank_p(F);
            if (r1 + r2 != F.prime_degree())
                throw ParamViolation("|Im(f1) x Im(f2)| must equal q^m");
            break;
        }
        case CodeDescriptor::Kind::Cj:
            if (desc.k < 3 || desc.k > m - 1) throw ParamViolation("need 3 <= k <= m-1");
            if (desc.j < 1 || desc.j > desc.k - 2)
                throw ParamViolation("omitted index must lie in 1..k-2");
            for (uint32_t i = 0; i < desc.k; ++i)
                if (i != desc.j) code.positions_.push_back(i);
            break;
    }
    code.desc_ = std::move(desc);

    const bool h_like = code.desc_.kind == CodeDescriptor::Kind::Hf1f2 ||
                        code.desc_.kind == CodeDescriptor::Kind::TwistedSheekey;
    code.param_count_ = h_like ? code.desc_.k : static_cast<uint32_t>(code.positions_.size());

    // extremality condition of the twisted family: recorded, not required
    if (h_like) {
        const FieldElement sign =
            (static_cast<uint64_t>(F.m()) * code.desc_.k) % 2 == 0 || F.characteristic() == 2
                ? F.one()
                : F.neg(F.one());
        if (code.desc_.kind == CodeDescriptor::Kind::TwistedSheekey) {
            code.mrd_checked_ = true;
            code.mrd_holds_ = F.is_zero(code.desc_.eta) ||
                              F.rel_norm(code.desc_.eta, F.m(), 1) != sign;
        } else if (F.size() <= (uint64_t{1} << 16)) {
            code.mrd_checked_ = true;
            code.mrd_holds_ = true;
            for (uint64_t idx = 1; idx < F.size(); ++idx) {
                FieldElement a = F.from_index(idx);
                FieldElement n1 = F.rel_norm(code.desc_.f1.apply(F, a), F.m(), 1);
                FieldElement n2 = F.rel_norm(code.desc_.f2.apply(F, a), F.m(), 1);
                if (n1 == F.mul(sign, n2)) {
                    code.mrd_holds_ = false;
                    break;
                }
            }
        }
    }

    // GF(p)-generator matrix, one row per parameter-space unit vector
    const uint32_t e = F.prime_degree();
    const uint32_t dim = code.param_count_ * e;
    code.gen_ = PMat(dim, n * e);
    std::vector<FieldElement> params(code.param_count_, F.zero());
    for (uint32_t t = 0; t < code.param_count_; ++t) {
        for (uint32_t u = 0; u < e; ++u) {
            params[t].data()[u] = 1;
            SigmaPoly f = code.poly_from_params(params);
            auto word = code.eval_poly(f);
            code.flatten(word, code.gen_.row(t * e + u));
            params[t].data()[u] = 0;
        }
    }
    code.rref_ = code.gen_;
    uint32_t rank = p_rref(code.rref_, F.characteristic(), &code.pivots_);
    if (rank != dim)
        throw ParamViolation("evaluation map is not injective at these parameters");
    return code;
}

SigmaPoly EvalCode::poly_from_params(std::span<const FieldElement> params) const {
    const Field& F = *f_;
    if (desc_.kind == CodeDescriptor::Kind::Hf1f2 ||
        desc_.kind == CodeDescriptor::Kind::TwistedSheekey) {
        std::vector<FieldElement> coeffs(static_cast<size_t>(desc_.k) + 1, F.zero());
        coeffs[0] = desc_.f1.apply(F, params[0]);
        for (uint32_t i = 1; i < desc_.k; ++i) coeffs[i] = params[i];
        coeffs[desc_.k] = F.add(coeffs[desc_.k], desc_.f2.apply(F, params[0]));
        return SigmaPoly::from_coeffs(F, std::move(coeffs));
    }
    std::vector<FieldElement> coeffs(f_->m(), F.zero());
    for (size_t t = 0; t < positions_.size(); ++t) coeffs[positions_[t]] = params[t];
    return SigmaPoly::from_coeffs(F, std::move(coeffs));
}

Big EvalCode::size() const { return big_pow(f_->characteristic(), gen_.rows); }

SigmaPoly EvalCode::poly_at(const Big& index) const {
    const Field& F = *f_;
    std::vector<FieldElement> params(param_count_, F.zero());
    Big rest = index;
    const Big fsize = F.size();
    for (uint32_t t = 0; t < param_count_; ++t) {
        params[t] = F.from_index((rest % fsize).convert_to<uint64_t>());
        rest /= fsize;
    }
    return poly_from_params(params);
}

std::vector<FieldElement> EvalCode::eval_poly(const SigmaPoly& f) const {
    std::vector<FieldElement> out;
    out.reserve(points_.size());
    for (const auto& pt : points_) out.push_back(f(pt));
    return out;
}

std::vector<FieldElement> EvalCode::codeword_at(const Big& index) const {
    return eval_poly(poly_at(index));
}

void EvalCode::for_each_codeword(const std::function<void(const uint32_t*)>& fn) const {
    const Field& F = *f_;
    const uint32_t p = F.characteristic();
    const uint32_t width = gen_.cols;
    const uint32_t digits = gen_.rows;
    std::vector<uint32_t> cur(width, 0);
    fn(cur.data());
    if (digits == 0) return;
    // loopless reflected GF(p)-ary Gray enumeration; one row add/subtract per step
    std::vector<uint32_t> a(digits, 0), focus(digits + 1);
    std::iota(focus.begin(), focus.end(), 0);
    std::vector<int8_t> dir(digits, 1);
    for (;;) {
        uint32_t j = focus[0];
        focus[0] = 0;
        if (j == digits) break;
        if (dir[j] > 0) {
            ++a[j];
            kernels::add_mod(cur.data(), cur.data(), gen_.row(j), width, p);
        } else {
            --a[j];
            kernels::sub_mod(cur.data(), cur.data(), gen_.row(j), width, p);
        }
        if (a[j] == 0 || a[j] == p - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        fn(cur.data());
    }
}

void EvalCode::flatten(std::span<const FieldElement> word, uint32_t* flat) const {
    const uint32_t e = f_->prime_degree();
    if (word.size() != points_.size()) throw LengthMismatch("word length != n");
    for (size_t i = 0; i < word.size(); ++i) {
        if (word[i].size() != e) throw FieldMismatch("codeword entry from a different field");
        for (uint32_t c = 0; c < e; ++c) flat[i * e + c] = word[i][c];
    }
}

std::vector<FieldElement> EvalCode::unflatten(const uint32_t* flat) const {
    const uint32_t e = f_->prime_degree();
    std::vector<FieldElement> out(points_.size(), FieldElement(e));
    for (size_t i = 0; i < out.size(); ++i)
        for (uint32_t c = 0; c < e; ++c) out[i][c] = flat[i * e + c];
    return out;
}

bool EvalCode::contains_flat(const uint32_t* flat) const {
    std::vector<uint32_t> v(flat, flat + gen_.cols);
    return p_reduce_against_rref(rref_, pivots_, f_->characteristic(), v.data());
}

bool EvalCode::contains(std::span<const FieldElement> word) const {
    std::vector<uint32_t> flat(gen_.cols, 0);
    flatten(word, flat.data());
    return contains_flat(flat.data());
}

std::vector<std::pair<uint32_t, uint32_t>> EvalCode::free_windows() const {
    const Field& F = *f_;
    std::vector<std::pair<uint32_t, uint32_t>> out;
    switch (desc_.kind) {
        case CodeDescriptor::Kind::Gabidulin:
            if (desc_.k >= 1) out.emplace_back(0, desc_.k - 1);
            break;
        case CodeDescriptor::Kind::PowerGabidulin:
            out.emplace_back(desc_.j, desc_.j + desc_.h - 1);
            break;
        case CodeDescriptor::Kind::Hf1f2:
        case CodeDescriptor::Kind::TwistedSheekey:
            if (desc_.f2.is_zero_map() && desc_.f1.is_bijective(F)) {
                out.emplace_back(0, desc_.k - 1);
            } else if (desc_.f1.is_zero_map() && desc_.f2.is_bijective(F)) {
                out.emplace_back(1, desc_.k);
            } else if (desc_.k >= 2) {
                out.emplace_back(1, desc_.k - 1);
            }
            break;
        case CodeDescriptor::Kind::Cj:
            if (desc_.j >= 1) out.emplace_back(0, desc_.j - 1);
            if (desc_.j + 1 <= desc_.k - 1) out.emplace_back(desc_.j + 1, desc_.k - 1);
            break;
    }
    return out;
}

bool EvalCode::contains_window(uint32_t lo, uint32_t hi) const {
    if (lo > hi) return false;
    for (auto [wl, wh] : free_windows()) {
        if (wl <= lo && hi <= wh) return true;
    }
    return false;
}

uint32_t EvalCode::min_distance(const Big& budget) const {
    if (d_) return *d_;
    if (size() <= 1) throw ParamViolation("minimum distance undefined: fewer than two codewords");
    if (size() > budget) throw BudgetExceeded("codeword enumeration exceeds the budget");
    const Field& F = *f_;
    const uint32_t nn = n();
    uint32_t best = nn + 1;
    bool first = true;
    for_each_codeword([&](const uint32_t* flat) {
        if (first) {  // zero word
            first = false;
            return;
        }
        uint32_t w = rank_weight_flat(F, flat, nn);
        if (w < best) best = w;
    });
    d_ = best;
    return best;
}

SingletonResult EvalCode::singleton_check(const Big& budget) const {
    SingletonResult res;
    if (size() <= 1) {
        res.degenerate = true;
        return res;
    }
    uint32_t d = min_distance(budget);
    const Field& F = *f_;
    const uint32_t nn = n(), m = F.m();
    const uint32_t emax = std::max(m, nn), emin = std::min(m, nn);
    // bound = q^{max(m,n) (min(m,n)-d+1)}; equality iff dim_p == ell * exponent
    const int64_t exponent = static_cast<int64_t>(emax) * (static_cast<int64_t>(emin) - d + 1);
    res.is_mrd = exponent >= 0 &&
                 static_cast<int64_t>(dim_p()) == static_cast<int64_t>(F.ell()) * exponent;
    res.defect_log_q =
        static_cast<double>(exponent) - static_cast<double>(dim_p()) / static_cast<double>(F.ell());
    return res;
}

// --- rank weight -------------------------------------------------------------------

uint32_t rank_weight_flat(const Field& F, const uint32_t* flat, uint32_t n) {
    const uint32_t e = F.prime_degree(), m = F.m();
    QMat mat(n, m);
    for (uint32_t i = 0; i < n; ++i) F.qcoords_raw(flat + static_cast<size_t>(i) * e, mat.row(i));
    return q_rref(F, mat);
}

uint32_t rank_weight(const Field& F, std::span<const FieldElement> v) {
    QMat mat(static_cast<uint32_t>(v.size()), F.m());
    for (uint32_t i = 0; i < v.size(); ++i) F.qcoords(v[i], mat.row(i));
    return q_rref(F, mat);
}

uint32_t rank_distance(const Field& F, std::span<const FieldElement> u,
                       std::span<const FieldElement> v) {
    if (u.size() != v.size()) throw LengthMismatch("rank distance needs equal lengths");
    std::vector<FieldElement> diff(u.size());
    for (size_t i = 0; i < u.size(); ++i) diff[i] = F.sub(u[i], v[i]);
    return rank_weight(F, diff);
}

Big count_in_ball(const EvalCode& code, std::span<const FieldElement> center, uint32_t radius,
                  const Big& budget) {
    if (code.size() > budget) throw BudgetExceeded("ball scan exceeds the budget");
    const Field& F = code.field();
    const uint32_t nn = code.n(), e = F.prime_degree();
    std::vector<uint32_t> cflat(static_cast<size_t>(nn) * e);
    code.flatten(center, cflat.data());
    std::vector<uint32_t> diff(cflat.size());
    Big count = 0;
    code.for_each_codeword([&](const uint32_t* flat) {
        kernels::sub_mod(diff.data(), cflat.data(), flat, diff.size(), F.characteristic());
        if (rank_weight_flat(F, diff.data(), nn) <= radius) ++count;
    });
    return count;
}

uint64_t cj_mbound(uint64_t q, uint32_t s, uint32_t k) {
    if (q <= 5) throw ParamViolation("omitted-monomial bound needs q > 5");
    if (k < 3) throw ParamViolation("omitted-monomial bound needs k >= 3");
    if (k == 3) return 12ull * s + 3;
    long double x = 13.0L / 3.0L * s * k +
                    std::log(13.0L * std::pow(2.0L, 10.0L / 3.0L)) / std::log(static_cast<long double>(q));
    return static_cast<uint64_t>(std::floor(x)) + 1;
}

}  // namespace rmlist
