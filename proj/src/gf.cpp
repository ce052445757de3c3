#include "rmlist/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "rmlist/kernels.hpp"
#include "rmlist/pmatrix.hpp"

namespace rmlist {

namespace {

uint32_t p_inv(uint32_t a, uint32_t p) { return p_inverse_scalar(a, p); }

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// --- dense GF(p)[x] arithmetic for the modulus sieve -----------------------

using Poly = std::vector<uint32_t>;  // low-to-high

int pdeg(const Poly& f) {
    for (size_t i = f.size(); i-- > 0;)
        if (f[i]) return static_cast<int>(i);
    return -1;
}

void ptrim(Poly& f) { f.resize(static_cast<size_t>(pdeg(f) + 1)); }

Poly pmod(Poly a, const Poly& f, uint32_t p) {
    const int df = pdeg(f);
    const uint32_t lead_inv = p_inv(f[static_cast<size_t>(df)], p);
    for (int i = pdeg(a); i >= df; i = pdeg(a)) {
        uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(a[static_cast<size_t>(i)]) * lead_inv % p);
        for (int j = 0; j <= df; ++j) {
            uint64_t t = static_cast<uint64_t>(c) * f[static_cast<size_t>(j)] % p;
            uint32_t& slot = a[static_cast<size_t>(i - df + j)];
            slot = static_cast<uint32_t>((slot + p - t) % p);
        }
    }
    ptrim(a);
    return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    if (pdeg(a) < 0 || pdeg(b) < 0) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            c[i + j] = static_cast<uint32_t>((c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return pmod(std::move(c), f, p);
}

Poly ppowmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
    Poly r = {1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, uint32_t p) {
    while (pdeg(b) >= 0) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^{p^k} mod f by iterated p-th powers.
Poly frob_iter(uint32_t k, const Poly& f, uint32_t p) {
    Poly t = {0, 1};
    for (uint32_t i = 0; i < k; ++i) t = ppowmod(std::move(t), p, f, p);
    return t;
}

bool poly_irreducible(const Poly& f, uint32_t p) {
    const int e = pdeg(f);
    if (e < 1) return false;
    if (f[0] == 0) return e == 1;  // divisible by x
    Poly xpe = frob_iter(static_cast<uint32_t>(e), f, p);
    // x^{p^e} must equal x mod f
    Poly x = {0, 1};
    if (pmod(xpe, f, p) != pmod(x, f, p)) return false;
    for (uint64_t r : prime_factors(static_cast<uint64_t>(e))) {
        Poly t = frob_iter(static_cast<uint32_t>(e / r), f, p);
        // gcd(x^{p^{e/r}} - x, f) must be constant
        Poly diff = t;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
        ptrim(diff);
        if (pdeg(pgcd(f, diff, p)) > 0) return false;
    }
    return true;
}

Poly canonical_modulus(uint32_t p, uint32_t e) {
    // candidates ordered by non-leading coefficients read as a base-p integer
    Poly f(e + 1, 0);
    f[e] = 1;
    for (uint64_t v = 1;; ++v) {
        uint64_t t = v;
        for (uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        if (t != 0) throw ParamViolation("no irreducible modulus found (degree too large)");
        if (f[0] == 0) continue;
        if (poly_irreducible(f, p)) return f;
    }
}

}  // namespace

// --- lazy tables ------------------------------------------------------------

struct Field::Tables {
    std::once_flag qflag;
    std::vector<FieldElement> qelems;
    std::unordered_map<uint64_t, uint32_t> qindex;
    std::vector<uint32_t> block2q, q2block;
    std::vector<uint32_t> b_cols, binv_cols;  // column-major e x e
    std::vector<uint32_t> qadd, qmul, qneg, qinv;

    std::mutex sub_mutex;
    std::map<uint32_t, std::vector<FieldElement>> sub_basis;

    std::once_flag genflag;
    FieldElement generator;
};

Field::Field(uint32_t p, uint32_t ell, uint32_t m, uint32_t s) : p_(p), ell_(ell), m_(m), s_(s) {
    init({});
}

Field::Field(const FieldParams& params) : p_(params.p), ell_(params.ell), m_(params.m), s_(params.s) {
    init(params.modulus);
}

Field::~Field() = default;

void Field::init(std::vector<uint32_t> modulus_or_empty) {
    if (!is_prime(p_)) throw ParamViolation("p must be prime");
    if (ell_ < 1) throw ParamViolation("ell must be >= 1");
    if (m_ < 2) throw ParamViolation("extension degree m must be >= 2");
    if (std::gcd(s_, m_) != 1) throw ParamViolation("gcd(s, m) must be 1");
    e_ = ell_ * m_;
    // overflow-safe p^e with the desk-scale guard
    uint64_t sz = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        sz *= p_;
        if (sz > kDeskScaleFieldLimit)
            throw ParamViolation("field size q^m exceeds the desk-scale limit 2^20");
    }
    size_ = sz;
    q_ = 1;
    for (uint32_t i = 0; i < ell_; ++i) q_ *= p_;

    if (modulus_or_empty.empty()) {
        modulus_ = canonical_modulus(p_, e_);
    } else {
        modulus_ = std::move(modulus_or_empty);
        if (modulus_.size() != static_cast<size_t>(e_) + 1)
            throw ParamViolation("modulus degree must be m*ell");
        for (auto& c : modulus_) c %= p_;
        if (modulus_.back() != 1) throw ParamViolation("modulus must be monic");
        if (!poly_irreducible(modulus_, p_)) throw ParamViolation("modulus is not irreducible over GF(p)");
    }

    // reduction rows: coords of x^{e+k} mod modulus
    red_.assign(e_ == 0 ? 0 : e_ - 1, std::vector<uint32_t>(e_, 0));
    if (e_ >= 1) {
        std::vector<uint32_t> cur(e_);
        for (uint32_t i = 0; i < e_; ++i) cur[i] = (p_ - modulus_[i]) % p_;
        for (uint32_t k = 0; k + 1 < e_; ++k) {
            red_[k] = cur;
            // multiply by x
            uint32_t top = cur[e_ - 1];
            for (uint32_t i = e_; i-- > 1;) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top) kernels::axpy_mod(cur.data(), red_[0].data(), top, e_, p_);
        }
    }

    // p-Frobenius matrix powers
    frob_.assign(e_, std::vector<uint32_t>(static_cast<size_t>(e_) * e_, 0));
    for (uint32_t k = 0; k < e_; ++k) frob_[0][static_cast<size_t>(k) * e_ + k] = 1;
    FieldElement xp = pow(x(), static_cast<int64_t>(p_));
    FieldElement t = one();
    for (uint32_t k = 0; k < e_; ++k) {
        for (uint32_t r = 0; r < e_; ++r) frob_[1 % e_][static_cast<size_t>(k) * e_ + r] = t[r];
        t = mul(t, xp);
    }
    if (e_ > 1) {
        for (uint32_t j = 2; j < e_; ++j) {
            // frob_[j] = frob_[1] * frob_[j-1]
            for (uint32_t c = 0; c < e_; ++c) {
                std::vector<uint32_t> col(e_, 0);
                for (uint32_t k = 0; k < e_; ++k) {
                    uint32_t v = frob_[j - 1][static_cast<size_t>(c) * e_ + k];
                    if (v) kernels::axpy_mod(col.data(), &frob_[1][static_cast<size_t>(k) * e_], v, e_, p_);
                }
                std::copy(col.begin(), col.end(), frob_[j].begin() + static_cast<size_t>(c) * e_);
            }
        }
    }

    tables_ = std::make_unique<Tables>();
}

FieldParams Field::params() const { return FieldParams{p_, ell_, m_, s_, modulus_}; }

void Field::check(const FieldElement& a) const {
    if (a.size() != e_) throw FieldMismatch("element does not belong to this field");
}

FieldElement Field::zero() const { return FieldElement(e_); }

FieldElement Field::one() const {
    FieldElement r(e_);
    r[0] = 1 % p_;
    return r;
}

FieldElement Field::x() const {
    FieldElement r(e_);
    if (e_ > 1)
        r[1] = 1;
    else
        r[0] = 1;  // unreachable for m >= 2
    return r;
}

FieldElement Field::from_int(uint64_t residue) const {
    FieldElement r(e_);
    r[0] = static_cast<uint32_t>(residue % p_);
    return r;
}

FieldElement Field::from_coords(std::span<const uint32_t> coords) const {
    if (coords.size() != e_) throw FieldMismatch("coordinate vector has wrong length");
    FieldElement r(e_);
    for (uint32_t i = 0; i < e_; ++i) r[i] = coords[i] % p_;
    return r;
}

FieldElement Field::from_index(uint64_t index) const {
    FieldElement r(e_);
    for (uint32_t i = 0; i < e_; ++i) {
        r[i] = static_cast<uint32_t>(index % p_);
        index /= p_;
    }
    return r;
}

uint64_t Field::index_of(const FieldElement& a) const {
    check(a);
    uint64_t v = 0;
    for (uint32_t i = e_; i-- > 0;) v = v * p_ + a[i];
    return v;
}

bool Field::is_zero(const FieldElement& a) const {
    check(a);
    for (uint32_t i = 0; i < e_; ++i)
        if (a[i]) return false;
    return true;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r(e_);
    kernels::add_mod(r.data(), a.data(), b.data(), e_, p_);
    return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r(e_);
    kernels::sub_mod(r.data(), a.data(), b.data(), e_, p_);
    return r;
}

FieldElement Field::neg(const FieldElement& a) const {
    check(a);
    FieldElement r(e_);
    for (uint32_t i = 0; i < e_; ++i) r[i] = a[i] ? p_ - a[i] : 0;
    return r;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    uint64_t acc[2 * kMaxPrimeDegree] = {0};
    for (uint32_t i = 0; i < e_; ++i) {
        if (!a[i]) continue;
        const uint64_t ai = a[i];
        for (uint32_t j = 0; j < e_; ++j) acc[i + j] += ai * b[j];
    }
    FieldElement r(e_);
    for (uint32_t k = 0; k < e_; ++k) r[k] = static_cast<uint32_t>(acc[k] % p_);
    for (uint32_t k = e_; k + 1 <= 2 * e_ - 1 && k < 2 * e_; ++k) {
        uint32_t c = static_cast<uint32_t>(acc[k] % p_);
        if (c) kernels::axpy_mod(r.data(), red_[k - e_].data(), c, e_, p_);
    }
    return r;
}

FieldElement Field::inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw DivisionByZero("inverse of zero");
    // extended Euclid in GF(p)[x] against the modulus
    Poly r0 = modulus_;
    Poly r1(a.data(), a.data() + e_);
    ptrim(r1);
    Poly t0 = {};
    Poly t1 = {1};
    while (pdeg(r1) > 0) {
        // divide r0 by r1
        Poly q(static_cast<size_t>(pdeg(r0) - pdeg(r1) + 1), 0);
        Poly rem = r0;
        const int d1 = pdeg(r1);
        const uint32_t lead_inv = p_inv(r1[static_cast<size_t>(d1)], p_);
        for (int i = pdeg(rem); i >= d1; i = pdeg(rem)) {
            uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(rem[static_cast<size_t>(i)]) * lead_inv % p_);
            q[static_cast<size_t>(i - d1)] = c;
            for (int j = 0; j <= d1; ++j) {
                uint64_t t = static_cast<uint64_t>(c) * r1[static_cast<size_t>(j)] % p_;
                uint32_t& slot = rem[static_cast<size_t>(i - d1 + j)];
                slot = static_cast<uint32_t>((slot + p_ - t) % p_);
            }
            ptrim(rem);
        }
        // t2 = t0 - q*t1
        Poly qt(q.size() + t1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i) {
            if (!q[i]) continue;
            for (size_t j = 0; j < t1.size(); ++j)
                qt[i + j] = static_cast<uint32_t>((qt[i + j] + static_cast<uint64_t>(q[i]) * t1[j]) % p_);
        }
        Poly t2(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < t2.size(); ++i) {
            uint32_t lhs = i < t0.size() ? t0[i] : 0;
            uint32_t rhs = i < qt.size() ? qt[i] : 0;
            t2[i] = (lhs + p_ - rhs) % p_;
        }
        ptrim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r1 is a nonzero constant (modulus irreducible, a != 0)
    const uint32_t c_inv = p_inv(r1.empty() ? 0 : r1[0], p_);
    FieldElement out(e_);
    for (size_t i = 0; i < t1.size() && i < e_; ++i)
        out[static_cast<uint32_t>(i)] = static_cast<uint32_t>(static_cast<uint64_t>(t1[i]) * c_inv % p_);
    return out;
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement Field::pow(const FieldElement& a, int64_t exp) const { return pow(a, Big(exp)); }

FieldElement Field::pow(const FieldElement& a, const Big& exp) const {
    check(a);
    if (is_zero(a)) {
        if (exp == 0) return one();
        if (exp < 0) throw DivisionByZero("negative power of zero");
        return zero();
    }
    const Big order = Big(size_) - 1;
    Big em = exp % order;
    if (em < 0) em += order;
    uint64_t e = em.convert_to<uint64_t>();
    FieldElement r = one();
    FieldElement b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FieldElement Field::matvec(const std::vector<uint32_t>& cols, const FieldElement& a) const {
    FieldElement r(e_);
    for (uint32_t c = 0; c < e_; ++c) {
        if (a[c]) kernels::axpy_mod(r.data(), &cols[static_cast<size_t>(c) * e_], a[c], e_, p_);
    }
    return r;
}

FieldElement Field::frobenius_q(const FieldElement& a, int64_t j) const {
    check(a);
    int64_t jm = j % m_;
    if (jm < 0) jm += m_;
    uint32_t idx = static_cast<uint32_t>((ell_ * static_cast<uint64_t>(jm)) % e_);
    if (idx == 0) return a;
    return matvec(frob_[idx], a);
}

FieldElement Field::frobenius_p(const FieldElement& a, int64_t j) const {
    check(a);
    int64_t je = j % e_;
    if (je < 0) je += e_;
    if (je == 0) return a;
    return matvec(frob_[static_cast<size_t>(je)], a);
}

FieldElement Field::frobenius(const FieldElement& a, int64_t i) const {
    int64_t im = i % m_;
    if (im < 0) im += m_;
    return frobenius_q(a, static_cast<int64_t>((static_cast<uint64_t>(s_) * im) % m_));
}

bool Field::in_subfield(const FieldElement& a, uint32_t n) const {
    if (n == 0 || m_ % n != 0) throw NonDivisorDegree("subfield level must divide m");
    return frobenius_q(a, n) == a;
}

FieldElement Field::rel_trace(const FieldElement& a, uint32_t n, uint32_t r) const {
    if (r == 0 || n == 0 || n % r != 0 || m_ % n != 0)
        throw NonDivisorDegree("rel_trace requires r | n and n | m");
    if (!in_subfield(a, n)) throw FieldMismatch("element is not in the GF(q^n) level");
    FieldElement acc = zero();
    FieldElement t = a;
    for (uint32_t i = 0; i < n / r; ++i) {
        acc = add(acc, t);
        t = frobenius_q(t, r);
    }
    return acc;
}

FieldElement Field::rel_norm(const FieldElement& a, uint32_t n, uint32_t r) const {
    if (r == 0 || n == 0 || n % r != 0 || m_ % n != 0)
        throw NonDivisorDegree("rel_norm requires r | n and n | m");
    if (!in_subfield(a, n)) throw FieldMismatch("element is not in the GF(q^n) level");
    uint64_t qn = 1, qr = 1;
    for (uint32_t i = 0; i < n; ++i) qn *= q_;
    for (uint32_t i = 0; i < r; ++i) qr *= q_;
    return pow(a, static_cast<int64_t>((qn - 1) / (qr - 1)));
}

// --- GF(q)-index layer -------------------------------------------------------

const Field::Tables& Field::tables() const {
    std::call_once(tables_->qflag, [this] {
        Tables& tb = *tables_;
        const uint32_t e = e_, p = p_;
        // GF(p)-basis of GF(q) = fixed space of a -> a^{p^ell}
        PMat k(e, e);
        const auto& fq = frob_[ell_ % e];
        for (uint32_t r = 0; r < e; ++r) {
            for (uint32_t c = 0; c < e; ++c) {
                uint32_t v = fq[static_cast<size_t>(c) * e + r];
                if (r == c) v = (v + p - 1) % p;
                k.at(r, c) = v;
            }
        }
        auto cbasis = p_nullspace(std::move(k), p);
        if (cbasis.size() != ell_) throw Error("internal: GF(q) basis has wrong size");
        // B columns: coords of x^i * c_j at column i*ell + j
        tb.b_cols.assign(static_cast<size_t>(e) * e, 0);
        FieldElement xi = one();
        for (uint32_t i = 0; i < m_; ++i) {
            for (uint32_t j = 0; j < ell_; ++j) {
                FieldElement cj = from_coords(cbasis[j]);
                FieldElement prod = mul(xi, cj);
                for (uint32_t r = 0; r < e; ++r)
                    tb.b_cols[static_cast<size_t>(i * ell_ + j) * e + r] = prod[r];
            }
            xi = mul(xi, x());
        }
        tb.binv_cols = p_invert_cols(tb.b_cols, e, p);
        // enumerate GF(q)
        const uint32_t q = static_cast<uint32_t>(q_);
        std::vector<std::pair<FieldElement, uint32_t>> elems;  // (elem, block int)
        elems.reserve(q);
        for (uint32_t blk = 0; blk < q; ++blk) {
            FieldElement el(e);
            uint32_t t = blk;
            for (uint32_t j = 0; j < ell_; ++j) {
                uint32_t d = t % p;
                t /= p;
                if (d) kernels::axpy_mod(el.data(), cbasis[j].data(), d, e, p);
            }
            elems.emplace_back(el, blk);
        }
        std::sort(elems.begin(), elems.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        tb.qelems.resize(q);
        tb.block2q.assign(q, 0);
        tb.q2block.assign(q, 0);
        for (uint32_t idx = 0; idx < q; ++idx) {
            tb.qelems[idx] = elems[idx].first;
            tb.block2q[elems[idx].second] = idx;
            tb.q2block[idx] = elems[idx].second;
            tb.qindex.emplace(index_of(elems[idx].first), idx);
        }
        // operation tables
        tb.qadd.assign(static_cast<size_t>(q) * q, 0);
        tb.qmul.assign(static_cast<size_t>(q) * q, 0);
        tb.qneg.assign(q, 0);
        tb.qinv.assign(q, 0);
        for (uint32_t u = 0; u < q; ++u) {
            tb.qneg[u] = tb.qindex.at(index_of(neg(tb.qelems[u])));
            if (u) tb.qinv[u] = tb.qindex.at(index_of(inv(tb.qelems[u])));
            for (uint32_t v = 0; v < q; ++v) {
                tb.qadd[static_cast<size_t>(u) * q + v] = tb.qindex.at(index_of(add(tb.qelems[u], tb.qelems[v])));
                tb.qmul[static_cast<size_t>(u) * q + v] = tb.qindex.at(index_of(mul(tb.qelems[u], tb.qelems[v])));
            }
        }
    });
    return *tables_;
}

uint32_t Field::q_add(uint32_t u, uint32_t v) const {
    const Tables& tb = tables();
    return tb.qadd[static_cast<size_t>(u) * q_ + v];
}

uint32_t Field::q_sub(uint32_t u, uint32_t v) const { return q_add(u, q_neg(v)); }

uint32_t Field::q_mul(uint32_t u, uint32_t v) const {
    const Tables& tb = tables();
    return tb.qmul[static_cast<size_t>(u) * q_ + v];
}

uint32_t Field::q_neg(uint32_t u) const { return tables().qneg[u]; }

uint32_t Field::q_inv(uint32_t u) const {
    if (u == 0) throw DivisionByZero("inverse of zero in GF(q)");
    return tables().qinv[u];
}

const FieldElement& Field::q_elem(uint32_t idx) const { return tables().qelems.at(idx); }

uint32_t Field::q_index(const FieldElement& a) const {
    check(a);
    auto it = tables().qindex.find(index_of(a));
    if (it == tables().qindex.end()) throw FieldMismatch("element is not in GF(q)");
    return it->second;
}

void Field::qcoords_raw(const uint32_t* coords, uint32_t* out) const {
    const Tables& tb = tables();
    uint32_t y[kMaxPrimeDegree] = {0};
    for (uint32_t c = 0; c < e_; ++c) {
        if (coords[c]) kernels::axpy_mod(y, &tb.binv_cols[static_cast<size_t>(c) * e_], coords[c], e_, p_);
    }
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t blk = 0;
        for (uint32_t j = ell_; j-- > 0;) blk = blk * p_ + y[i * ell_ + j];
        out[i] = tb.block2q[blk];
    }
}

void Field::qcoords(const FieldElement& a, uint32_t* out) const {
    check(a);
    qcoords_raw(a.data(), out);
}

std::vector<uint32_t> Field::qcoords(const FieldElement& a) const {
    std::vector<uint32_t> out(m_);
    qcoords(a, out.data());
    return out;
}

FieldElement Field::from_qcoords(std::span<const uint32_t> idx) const {
    if (idx.size() != m_) throw FieldMismatch("qcoords vector has wrong length");
    const Tables& tb = tables();
    FieldElement r(e_);
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t blk = tb.q2block.at(idx[i]);
        for (uint32_t j = 0; j < ell_; ++j) {
            uint32_t d = blk % p_;
            blk /= p_;
            if (d) kernels::axpy_mod(r.data(), &tb.b_cols[static_cast<size_t>(i * ell_ + j) * e_], d, e_, p_);
        }
    }
    return r;
}

// --- subfields ---------------------------------------------------------------

const std::vector<FieldElement>& Field::subfield_basis(uint32_t n) const {
    if (n == 0 || m_ % n != 0) throw NonDivisorDegree("subfield level must divide m");
    Tables& tb = *tables_;
    tables();  // ensure q-layer
    std::lock_guard<std::mutex> lock(tb.sub_mutex);
    auto it = tb.sub_basis.find(n);
    if (it != tb.sub_basis.end()) return it->second;

    // GF(p)-fixed space of a -> a^{q^n}
    const uint32_t e = e_, p = p_;
    uint32_t idx = static_cast<uint32_t>((ell_ * static_cast<uint64_t>(n % m_)) % e);
    PMat k(e, e);
    for (uint32_t r = 0; r < e; ++r) {
        for (uint32_t c = 0; c < e; ++c) {
            uint32_t v = frob_[idx][static_cast<size_t>(c) * e + r];
            if (r == c) v = (v + p - 1) % p;
            k.at(r, c) = v;
        }
    }
    auto pbasis = p_nullspace(std::move(k), p);
    // reduce to a canonical GF(q)-basis via RREF over GF(q)
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(pbasis.size());
    for (const auto& v : pbasis) {
        std::vector<uint32_t> qc(m_);
        qcoords_raw(v.data(), qc.data());
        rows.push_back(std::move(qc));
    }
    // in-place RREF over GF(q)
    uint32_t rank = 0;
    for (uint32_t col = 0; col < m_ && rank < rows.size(); ++col) {
        uint32_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        uint32_t piv_inv = q_inv(rows[rank][col]);
        for (uint32_t c = 0; c < m_; ++c) rows[rank][c] = q_mul(rows[rank][c], piv_inv);
        for (uint32_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rank) continue;
            uint32_t f = rows[r2][col];
            if (f) {
                for (uint32_t c = 0; c < m_; ++c)
                    rows[r2][c] = q_sub(rows[r2][c], q_mul(f, rows[rank][c]));
            }
        }
        ++rank;
    }
    if (rank != n) throw Error("internal: subfield basis has wrong GF(q)-dimension");
    std::vector<FieldElement> basis;
    basis.reserve(n);
    for (uint32_t r = 0; r < n; ++r) basis.push_back(from_qcoords(rows[r]));
    auto [pos, ok] = tb.sub_basis.emplace(n, std::move(basis));
    (void)ok;
    return pos->second;
}

std::vector<FieldElement> Field::subfield_elements(uint32_t n) const {
    const auto& basis = subfield_basis(n);
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(1) << std::min<uint32_t>(20, n * static_cast<uint32_t>(ell_)));
    out.push_back(zero());
    for (const auto& b : basis) {
        const size_t cur = out.size();
        for (uint32_t u = 1; u < q_; ++u) {
            FieldElement ub = mul(q_elem(u), b);
            for (size_t i = 0; i < cur; ++i) out.push_back(add(out[i], ub));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const FieldElement& Field::multiplicative_generator() const {
    Tables& tb = *tables_;
    std::call_once(tb.genflag, [this, &tb] {
        const uint64_t order = size_ - 1;
        if (order == 1) {
            tb.generator = one();
            return;
        }
        auto factors = prime_factors(order);
        for (uint64_t idx = 2; idx < size_; ++idx) {
            FieldElement a = from_index(idx);
            bool ok = true;
            for (uint64_t f : factors) {
                if (pow(a, static_cast<int64_t>(order / f)) == one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                tb.generator = a;
                return;
            }
        }
        throw Error("internal: no multiplicative generator found");
    });
    return tb.generator;
}

// --- exponent machinery --------------------------------------------------------

uint64_t exponent_reduce(const Field& F, uint32_t n, std::span<const SigmaPower> num,
                         std::span<const SigmaPower> den) {
    if (n == 0 || F.m() % n != 0) throw NonDivisorDegree("exponent level must divide m");
    auto eval = [&](std::span<const SigmaPower> terms) {
        Big acc = 0;
        for (const auto& t : terms) {
            if (t.coeff == 0) continue;
            acc += Big(t.coeff) * big_pow(F.q(), F.s() * t.power);
        }
        return acc;
    };
    Big numerator = eval(num);
    if (numerator == 0) return 0;
    Big denominator = den.empty() ? Big(1) : eval(den);
    if (denominator == 0) throw ParamViolation("zero denominator in sigma-power exponent");
    if (numerator % denominator != 0)
        throw NonIntegerExponent("sigma-power exponent is not an integer");
    Big v = numerator / denominator;
    Big order = big_pow(F.q(), n) - 1;
    Big r = v % order;
    if (r < 0) r += order;
    return r.convert_to<uint64_t>();
}

}  // namespace rmlist
