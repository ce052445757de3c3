#include "rmlist/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace rmlist {

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Binomial: return "binomial";
        case FamilyKind::Trace: return "trace";
        case FamilyKind::Tri1: return "tri1";
        case FamilyKind::Tri1Hat: return "tri1hat";
        case FamilyKind::Tri2: return "tri2";
        case FamilyKind::Tri2Hat: return "tri2hat";
        case FamilyKind::HuangF: return "huangf";
        case FamilyKind::HuangG: return "huangg";
        case FamilyKind::Q: return "q";
        case FamilyKind::QPrime: return "qprime";
        case FamilyKind::Pigeonhole: return "pigeonhole";
    }
    return "?";
}

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
    for (FamilyKind k :
         {FamilyKind::Binomial, FamilyKind::Trace, FamilyKind::Tri1, FamilyKind::Tri1Hat,
          FamilyKind::Tri2, FamilyKind::Tri2Hat, FamilyKind::HuangF, FamilyKind::HuangG,
          FamilyKind::Q, FamilyKind::QPrime, FamilyKind::Pigeonhole}) {
        if (name == family_kind_name(k)) return k;
    }
    return std::nullopt;
}

namespace {

void check_level(const Field& F, uint32_t n, const char* who) {
    if (n == 0 || F.m() % n != 0)
        throw ParamViolation(std::string(who) + ": family level n must divide m");
    if (std::gcd(F.s(), n) != 1)
        throw ParamViolation(std::string(who) + ": gcd(s, n) must be 1 at the family level");
}

uint64_t q_power(const Field& F, uint32_t e) {
    uint64_t v = 1;
    for (uint32_t i = 0; i < e; ++i) v *= F.q();
    return v;
}

/// Nonzero elements of GF(q^n), sorted canonically.
std::vector<FieldElement> nonzero_subfield(const Field& F, uint32_t n) {
    auto all = F.subfield_elements(n);
    std::vector<FieldElement> out;
    out.reserve(all.size() - 1);
    for (auto& a : all)
        if (!F.is_zero(a)) out.push_back(std::move(a));
    return out;
}

/// Representatives of GF(q^n)^* / GF(q^t)^*, smallest of each coset in
/// canonical order; requires t | n.
std::vector<FieldElement> coset_reps(const Field& F, uint32_t n, uint32_t t) {
    auto full = nonzero_subfield(F, n);
    auto sub = nonzero_subfield(F, t);
    std::unordered_set<uint64_t> seen;
    std::vector<FieldElement> reps;
    for (const auto& b : full) {
        if (seen.count(F.index_of(b))) continue;
        reps.push_back(b);
        for (const auto& g : sub) seen.insert(F.index_of(F.mul(g, b)));
    }
    return reps;
}

bool is_char_power(uint32_t v, uint32_t p) {
    if (v == 0) return false;
    while (v % p == 0) v /= p;
    return v == 1;
}

SubspacePolyFamily finish(FamilySpec spec, uint64_t expected, uint32_t deg,
                          std::vector<SigmaPoly> members) {
    std::sort(members.begin(), members.end(),
              [](const SigmaPoly& a, const SigmaPoly& b) { return a.canonical_less(b); });
    return SubspacePolyFamily{std::move(spec), expected, deg, std::move(members)};
}

}  // namespace

SubspacePolyFamily gen_binomials(const Field& F, uint32_t n, uint32_t t) {
    check_level(F, n, "gen_binomials");
    if (t < 1 || t > n - 1 || n % t != 0)
        throw ParamViolation("gen_binomials: need 1 <= t <= n-1 and t | n");
    std::vector<SigmaPoly> members;
    for (const auto& a0 : nonzero_subfield(F, n)) {
        if (F.rel_norm(a0, n, t) != F.one()) continue;
        SigmaPoly f = SigmaPoly::monomial(F, t, F.one()) - SigmaPoly::monomial(F, 0, a0);
        members.push_back(std::move(f));
    }
    uint64_t expected = (q_power(F, n) - 1) / (q_power(F, t) - 1);
    return finish(FamilySpec{FamilyKind::Binomial, n, t, 0, 0, {}, 0, 0}, expected, t,
                  std::move(members));
}

SubspacePolyFamily gen_trace_family(const Field& F, uint32_t n, uint32_t t) {
    check_level(F, n, "gen_trace_family");
    if (t < 1 || t > n || n % t != 0)
        throw ParamViolation("gen_trace_family: need 1 <= t <= n and t | n");
    std::vector<SigmaPoly> members;
    for (const auto& beta : coset_reps(F, n, t)) {
        std::vector<FieldElement> coeffs(static_cast<size_t>(n - t) + 1, F.zero());
        FieldElement denom_inv = F.inv(F.frobenius(beta, static_cast<int64_t>(n) - t));
        for (uint32_t i = 0; i < n / t; ++i) {
            coeffs[static_cast<size_t>(i) * t] =
                F.mul(F.frobenius(beta, static_cast<int64_t>(i) * t), denom_inv);
        }
        members.push_back(SigmaPoly::from_coeffs(F, std::move(coeffs)));
    }
    uint64_t expected = (q_power(F, n) - 1) / (q_power(F, t) - 1);
    return finish(FamilySpec{FamilyKind::Trace, n, t, 0, 0, {}, 0, 0}, expected, n - t,
                  std::move(members));
}

namespace {

/// Common core of the two trinomial families: enumerate a with the required
/// norm, compute b = sign * a^{+-E} and emit x^{sigma^t} - b x^sigma - a x.
std::vector<SigmaPoly> trinomials(const Field& F, uint32_t n, uint32_t t,
                                  const FieldElement& norm_target, uint64_t exp_reduced,
                                  bool negate_b, bool invert_power) {
    std::vector<SigmaPoly> out;
    for (const auto& a : nonzero_subfield(F, n)) {
        if (F.rel_norm(a, n, 1) != norm_target) continue;
        FieldElement b = F.pow(a, static_cast<int64_t>(exp_reduced));
        if (invert_power) b = F.inv(b);
        if (negate_b) b = F.neg(b);
        std::vector<FieldElement> coeffs(static_cast<size_t>(t) + 1, F.zero());
        coeffs[0] = F.neg(a);
        coeffs[1] = F.neg(b);
        coeffs[t] = F.one();
        out.push_back(SigmaPoly::from_coeffs(F, std::move(coeffs)));
    }
    return out;
}

std::vector<SigmaPoly> monic_shifted_adjoints(const std::vector<SigmaPoly>& in) {
    std::vector<SigmaPoly> out;
    out.reserve(in.size());
    for (const auto& f : in) {
        SigmaPoly g = shifted_adjoint(f);
        const Field& F = g.field();
        FieldElement lead = g.coeff(static_cast<uint32_t>(g.degree()));
        out.push_back(g.scaled(F.inv(lead)));
    }
    return out;
}

void check_tri1_params(const Field& F, uint32_t n, uint32_t t) {
    check_level(F, n, "gen_tri1");
    if (t < 2 || n != t * (t - 1) + 1) throw ParamViolation("gen_tri1: need n = t(t-1)+1");
    if (!is_char_power(t - 1, F.characteristic()))
        throw ParamViolation("gen_tri1: t-1 must be a power of the characteristic");
}

void check_tri2_params(const Field& F, uint32_t n, uint32_t t) {
    check_level(F, n, "gen_tri2");
    if (F.characteristic() != 2) throw ParamViolation("gen_tri2: q must be a power of 2");
    if (t < 2 || !is_char_power(t, 2)) throw ParamViolation("gen_tri2: t must be a power of 2");
    if (n != t * t - 1) throw ParamViolation("gen_tri2: need n = t^2 - 1");
}

}  // namespace

SubspacePolyFamily gen_tri1(const Field& F, uint32_t n, uint32_t t) {
    check_tri1_params(F, n, t);
    // b = -a^{(sigma^n - sigma)/(sigma^t - 1)}
    SigmaPower num[2] = {{1, n}, {-1, 1}};
    SigmaPower den[2] = {{1, t}, {-1, 0}};
    uint64_t e = exponent_reduce(F, n, num, den);
    FieldElement target = (t - 1) % 2 == 0 ? F.one() : F.neg(F.one());
    auto members = trinomials(F, n, t, target, e, /*negate_b=*/true, /*invert_power=*/false);
    uint64_t expected = (q_power(F, n) - 1) / (F.q() - 1);
    return finish(FamilySpec{FamilyKind::Tri1, n, t, 0, 0, {}, 0, 0}, expected, t,
                  std::move(members));
}

SubspacePolyFamily gen_tri1_hat(const Field& F, uint32_t n, uint32_t t) {
    SubspacePolyFamily base = gen_tri1(F, n, t);
    auto members = monic_shifted_adjoints(base.members);
    return finish(FamilySpec{FamilyKind::Tri1Hat, n, t, 0, 0, {}, 0, 0}, base.expected_size, t,
                  std::move(members));
}

SubspacePolyFamily gen_tri2(const Field& F, uint32_t n, uint32_t t) {
    check_tri2_params(F, n, t);
    // b = a^{-(sigma^{t^2} - sigma^t)/(sigma^t - 1)}
    SigmaPower num[2] = {{1, static_cast<uint64_t>(t) * t}, {-1, t}};
    SigmaPower den[2] = {{1, t}, {-1, 0}};
    uint64_t e = exponent_reduce(F, n, num, den);
    auto members = trinomials(F, n, t, F.one(), e, /*negate_b=*/false, /*invert_power=*/true);
    uint64_t expected = (q_power(F, n) - 1) / (F.q() - 1);
    return finish(FamilySpec{FamilyKind::Tri2, n, t, 0, 0, {}, 0, 0}, expected, t,
                  std::move(members));
}

SubspacePolyFamily gen_tri2_hat(const Field& F, uint32_t n, uint32_t t) {
    SubspacePolyFamily base = gen_tri2(F, n, t);
    auto members = monic_shifted_adjoints(base.members);
    return finish(FamilySpec{FamilyKind::Tri2Hat, n, t, 0, 0, {}, 0, 0}, base.expected_size, t,
                  std::move(members));
}

namespace {

struct HuangShape {
    std::vector<uint64_t> p_seq;  // p_0 .. p_k
    uint32_t deg = 0;             // t * p_{k-1}
};

HuangShape huang_shape(const Field& F, uint32_t n, uint32_t t, uint32_t k, uint32_t r) {
    if (t < 1 || k < 1) throw ParamViolation("progression family: need t >= 1 and k >= 1");
    uint64_t qp = 1;
    for (uint32_t i = 0; i < r; ++i) {
        qp *= F.characteristic();
        if (qp > kDeskScaleFieldLimit) throw ParamViolation("progression family: q' too large");
    }
    HuangShape sh;
    uint64_t pi = 0, power = 1;
    for (uint32_t i = 0; i <= k; ++i) {
        pi += power;
        power *= qp;
        sh.p_seq.push_back(pi);
        if (pi > kDeskScaleFieldLimit) throw ParamViolation("progression family: p_k too large");
    }
    if (static_cast<uint64_t>(t) * sh.p_seq[k] != n)
        throw ParamViolation("progression family: need n = t * p_k");
    sh.deg = static_cast<uint32_t>(t * sh.p_seq[k - 1]);
    return sh;
}

}  // namespace

SigmaPoly gen_huang(const Field& F, uint32_t n, uint32_t t, uint32_t k, uint32_t r) {
    check_level(F, n, "gen_huang");
    HuangShape sh = huang_shape(F, n, t, k, r);
    std::vector<FieldElement> coeffs(static_cast<size_t>(sh.deg) + 1, F.zero());
    coeffs[0] = F.one();
    for (uint32_t i = 0; i < k; ++i) {
        size_t pos = static_cast<size_t>(t) * sh.p_seq[i];
        coeffs[pos] = F.add(coeffs[pos], F.one());
    }
    return SigmaPoly::from_coeffs(F, std::move(coeffs));
}

SigmaPoly gen_huang_adjoint(const Field& F, uint32_t n, uint32_t t, uint32_t k, uint32_t r) {
    return shifted_adjoint(gen_huang(F, n, t, k, r));
}

namespace {

SubspacePolyFamily beta_scalings(const Field& F, const SigmaPoly& f, FamilyKind kind, uint32_t n,
                                 uint32_t t, uint32_t k, uint32_t r) {
    std::vector<SigmaPoly> members;
    for (const auto& beta : coset_reps(F, n, t)) {
        members.push_back(scale_transform(f, F.inv(beta)));
    }
    uint64_t expected = (q_power(F, n) - 1) / (q_power(F, t) - 1);
    return finish(FamilySpec{kind, n, t, k, r, {}, 0, 0}, expected,
                  static_cast<uint32_t>(f.degree()), std::move(members));
}

}  // namespace

SubspacePolyFamily gen_q_family(const Field& F, uint32_t n, uint32_t t, uint32_t k, uint32_t r) {
    SigmaPoly f = gen_huang(F, n, t, k, r);
    return beta_scalings(F, f, FamilyKind::Q, n, t, k, r);
}

SubspacePolyFamily gen_q_prime_family(const Field& F, uint32_t n, uint32_t t, uint32_t k,
                                      uint32_t r) {
    SigmaPoly g = gen_huang_adjoint(F, n, t, k, r);
    return beta_scalings(F, g, FamilyKind::QPrime, n, t, k, r);
}

SigmaPoly scale_transform(const SigmaPoly& f, const FieldElement& alpha) {
    const Field& F = f.field();
    if (F.is_zero(alpha)) throw ZeroScalar("scale_transform requires alpha != 0");
    if (f.is_zero()) throw ZeroPolynomial("scale_transform of the zero polynomial");
    const uint32_t k = static_cast<uint32_t>(f.degree());
    FieldElement outer = F.frobenius(alpha, k);
    FieldElement ainv = F.inv(alpha);
    std::vector<FieldElement> coeffs(static_cast<size_t>(k) + 1, F.zero());
    for (uint32_t i = 0; i <= k; ++i) {
        FieldElement ci = f.coeff(i);
        if (F.is_zero(ci)) continue;
        coeffs[i] = F.mul(F.mul(outer, ci), F.frobenius(ainv, i));
    }
    return SigmaPoly::from_coeffs(F, std::move(coeffs));
}

PigeonholeResult pigeonhole_family(const Field& F, std::span<const FieldElement> S, uint32_t r,
                                   uint32_t g) {
    const uint32_t n = static_cast<uint32_t>(S.size());
    if (!(g >= 1 && g <= r && r < n && n <= F.m()))
        throw ParamViolation("pigeonhole_family: need 1 <= g <= r < n <= m");
    {
        QMat pts(n, F.m());
        for (uint32_t i = 0; i < n; ++i) F.qcoords(S[i], pts.row(i));
        if (q_rank(F, std::move(pts)) != n)
            throw ParamViolation("pigeonhole_family: points are GF(q)-dependent");
    }
    std::map<std::vector<uint64_t>, std::vector<SigmaPoly>> groups;
    for_each_rref(F, n, r, [&](const QMat& coords) {
        // rows of coords are GF(q)-combinations of the points of S
        std::vector<FieldElement> basis;
        basis.reserve(r);
        for (uint32_t row = 0; row < r; ++row) {
            FieldElement b = F.zero();
            for (uint32_t c = 0; c < n; ++c) {
                uint32_t u = coords.at(row, c);
                if (u) b = F.add(b, F.mul(F.q_elem(u), S[c]));
            }
            basis.push_back(std::move(b));
        }
        SigmaPoly sp = moore_subspace_poly(F, basis);
        std::vector<uint64_t> key;
        key.reserve(g);
        for (uint32_t i = r - g + 1; i <= r; ++i) key.push_back(F.index_of(sp.coeff(i)));
        groups[std::move(key)].push_back(std::move(sp));
    });
    PigeonholeResult res;
    res.group_count = groups.size();
    size_t best = 0;
    for (auto& [key, members] : groups) {
        if (members.size() > best) {  // ties keep the smallest key (map order)
            best = members.size();
            res.key = key;
            res.members = std::move(members);
        }
    }
    std::sort(res.members.begin(), res.members.end(),
              [](const SigmaPoly& a, const SigmaPoly& b) { return a.canonical_less(b); });
    res.subspace_count = gaussian_binomial(n, r, F.q());
    res.bound = ceil_div(res.subspace_count, big_pow(F.q(), static_cast<uint64_t>(F.m()) * (g - 1)));
    return res;
}

namespace {

SubspacePolyFamily generate_family_base(const Field& F, const FamilySpec& spec);

}  // namespace

SubspacePolyFamily generate_family(const Field& F, const FamilySpec& spec) {
    SubspacePolyFamily fam = generate_family_base(F, spec);
    if (spec.take_adjoint) {
        fam.spec.take_adjoint = true;
        for (SigmaPoly& f : fam.members) f = shifted_adjoint(f);
        std::sort(fam.members.begin(), fam.members.end(),
                  [](const SigmaPoly& a, const SigmaPoly& b) { return a.canonical_less(b); });
    }
    return fam;
}

namespace {

SubspacePolyFamily generate_family_base(const Field& F, const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Binomial: return gen_binomials(F, spec.n, spec.t);
        case FamilyKind::Trace: return gen_trace_family(F, spec.n, spec.t);
        case FamilyKind::Tri1: return gen_tri1(F, spec.n, spec.t);
        case FamilyKind::Tri1Hat: return gen_tri1_hat(F, spec.n, spec.t);
        case FamilyKind::Tri2: return gen_tri2(F, spec.n, spec.t);
        case FamilyKind::Tri2Hat: return gen_tri2_hat(F, spec.n, spec.t);
        case FamilyKind::HuangF: {
            SubspacePolyFamily fam;
            fam.spec = spec;
            SigmaPoly f = gen_huang(F, spec.n, spec.t, spec.k, spec.r);
            fam.sigma_degree = static_cast<uint32_t>(f.degree());
            fam.expected_size = 1;
            fam.members.push_back(std::move(f));
            return fam;
        }
        case FamilyKind::HuangG: {
            SubspacePolyFamily fam;
            fam.spec = spec;
            SigmaPoly f = gen_huang_adjoint(F, spec.n, spec.t, spec.k, spec.r);
            fam.sigma_degree = static_cast<uint32_t>(f.degree());
            fam.expected_size = 1;
            fam.members.push_back(std::move(f));
            return fam;
        }
        case FamilyKind::Q: return gen_q_family(F, spec.n, spec.t, spec.k, spec.r);
        case FamilyKind::QPrime: return gen_q_prime_family(F, spec.n, spec.t, spec.k, spec.r);
        case FamilyKind::Pigeonhole: {
            PigeonholeResult res = pigeonhole_family(F, spec.points, spec.subspace_dim, spec.agreement);
            SubspacePolyFamily fam;
            fam.spec = spec;
            fam.sigma_degree = spec.subspace_dim;
            fam.expected_size = res.members.size();
            fam.members = std::move(res.members);
            return fam;
        }
    }
    throw ParamViolation("unknown family kind");
}

}  // namespace

}  // namespace rmlist
