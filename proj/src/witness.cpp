#include "rmlist/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace rmlist {

JohnsonRadius johnson_like_radius(uint32_t m, uint32_t n, uint32_t h, double eps) {
    if (eps < 0.0 || eps >= 1.0) throw ParamViolation("need 0 <= eps < 1");
    if (!(h <= n && n <= m)) throw ParamViolation("need h <= n <= m");
    const long double half = (static_cast<long double>(m) + n) / 2.0L;
    const long double radicand =
        half * half - static_cast<long double>(m) * (static_cast<long double>(n) - h + 1 - eps);
    if (radicand < 0)
        throw NegativeRadicand("(m+n)^2/4 < m(n-h+1-eps): threshold undefined here");
    JohnsonRadius out;
    out.value = static_cast<double>(half - std::sqrt(radicand));
    out.first_integer = static_cast<uint32_t>(std::ceil(out.value - 1e-9));
    return out;
}

const char* witness_mode_name(WitnessMode m) {
    switch (m) {
        case WitnessMode::GeneralBasis: return "general";
        case WitnessMode::SubfieldBasis: return "subfield";
        case WitnessMode::SubfieldBasisHat: return "subfield_hat";
    }
    return "?";
}

std::optional<WitnessMode> witness_mode_from_name(const std::string& s) {
    for (WitnessMode m :
         {WitnessMode::GeneralBasis, WitnessMode::SubfieldBasis, WitnessMode::SubfieldBasisHat}) {
        if (s == witness_mode_name(m)) return m;
    }
    return std::nullopt;
}

namespace {

uint32_t unique_radius(uint32_t d) { return (d - 1) / 2; }

/// Fills the report list from R and the transformed family members and runs
/// the constructive checks shared by all three modes.
void assemble_report(const EvalCode& code, std::vector<SigmaPoly> members, uint32_t radius,
                     const WitnessOptions& opts, WitnessReport& rep) {
    const Field& F = code.field();
    std::sort(members.begin(), members.end(),
              [](const SigmaPoly& a, const SigmaPoly& b) { return a.canonical_less(b); });
    const SigmaPoly& R = members.front();
    rep.chosen_r = R.coeffs();
    rep.w = code.eval_poly(R);
    rep.radius = radius;

    rep.checks.w_not_in_code =
        rank_weight(F, rep.w) == radius && !code.contains(rep.w);

    rep.checks.listed_in_code = true;
    rep.checks.distances_exact = true;
    std::set<std::vector<uint64_t>> seen;
    for (const SigmaPoly& P : members) {
        SigmaPoly diff = R - P;
        std::vector<FieldElement> word = code.eval_poly(diff);
        if (!code.contains(word))
            throw ContainmentFailure(
                "constructed list word is not a codeword (descriptor/subcode mismatch)");
        if (rank_distance(F, rep.w, word) != radius) rep.checks.distances_exact = false;
        std::vector<uint64_t> key;
        key.reserve(word.size());
        for (const auto& c : word) key.push_back(F.index_of(c));
        seen.insert(std::move(key));
        rep.list.push_back(std::move(word));
    }
    rep.checks.distinct = seen.size() == rep.list.size();
    rep.checks.size_ge_bound = Big(rep.list.size()) >= rep.bound;

    if (opts.exhaustive) {
        rep.checks.exhaustive_count = count_in_ball(code, rep.w, radius, opts.budget);
        rep.checks.exhaustive_done = true;
    }
    rep.verified = rep.checks.w_not_in_code && rep.checks.listed_in_code &&
                   rep.checks.distances_exact && rep.checks.distinct && rep.checks.size_ge_bound &&
                   (!opts.exhaustive || (rep.checks.exhaustive_count >= rep.bound &&
                                         rep.checks.exhaustive_count >= Big(rep.list.size())));
}

void require_subfield_points(const EvalCode& code) {
    if (code.point_spec().kind != PointSpec::Kind::SubfieldBasis)
        throw HypothesisViolation("evaluation points are not a basis of beta GF(q^n)");
}

/// Family membership in the affine support set: monic leader at l with free
/// support in [0, h-1] (hat = false), or unit constant term with free support
/// in [l-h+1, l] (hat = true); members must be max-kernel with coefficients
/// and kernel inside the GF(q^n) level.
void check_family_shape(const Field& F, std::span<const SigmaPoly> members, uint32_t n, uint32_t l,
                        uint32_t h, bool hat) {
    for (const SigmaPoly& P : members) {
        if (P.degree() != static_cast<int>(l))
            throw FamilyNotInPol("family member has sigma-degree != l");
        if (!hat && !P.is_monic()) throw FamilyNotInPol("family member is not monic at sigma^l");
        if (hat && !(P.coeff(0) == F.one()))
            throw FamilyNotInPol("family member lacks the unit constant term");
        for (uint32_t i : P.support()) {
            bool ok = hat ? (i == 0 || (i + h >= l + 1 && i <= l)) : (i < h || i == l);
            if (!ok) throw FamilyNotInPol("family member support leaves the prescribed window");
            if (!F.in_subfield(P.coeff(i), n))
                throw FamilyNotInPol("family coefficient is outside GF(q^n)");
        }
        FqSubspace ker = kernel(P);
        if (ker.dim() != l) throw FamilyNotInPol("family member is not a maximum-kernel polynomial");
        for (const auto& b : ker.basis_elements()) {
            if (!F.in_subfield(b, n))
                throw FamilyNotInPol("family member kernel leaves GF(q^n)");
        }
    }
}

WitnessReport subfield_witness_impl(const EvalCode& code, uint32_t l, uint32_t h, uint32_t j,
                                    const SubspacePolyFamily& family, bool hat,
                                    const WitnessOptions& opts) {
    require_subfield_points(code);
    const Field& F = code.field();
    const uint32_t n = code.n();
    const uint32_t d = code.min_distance(opts.budget);

    if (l + d < n + 1) throw HypothesisViolation("l >= n-d+1 violated");
    if (l > n - unique_radius(d) - 1)
        throw HypothesisViolation("l <= n - floor((d-1)/2) - 1 violated");
    if (h < 1 || l < h) throw HypothesisViolation("l >= h >= 1 violated");
    if (!hat) {
        if (j >= n - l) throw HypothesisViolation("j < n-l violated");
    } else {
        int64_t lim = static_cast<int64_t>(n) - 2 * static_cast<int64_t>(l) + h - 1;
        if (static_cast<int64_t>(j) >= lim) throw HypothesisViolation("j < n-2l+h-1 violated");
    }
    const uint32_t shift = hat ? l - h + 1 + j : j;
    if (!code.contains_window(shift, shift + h - 1))
        throw HypothesisViolation("code does not contain the shifted window of width h");

    if (family.spec.n != code.point_spec().n)
        throw HypothesisViolation("family level differs from the point-basis level n");

    // hat members are canonicalized to a unit constant term (scaling does not
    // move kernels); the plain mode takes the monic members as they come
    std::vector<SigmaPoly> shaped;
    shaped.reserve(family.members.size());
    for (const SigmaPoly& P : family.members) {
        if (hat) {
            FieldElement c0 = P.coeff(0);
            if (F.is_zero(c0))
                throw FamilyNotInPol("family member lacks a constant term to normalize");
            shaped.push_back(P.scaled(F.inv(c0)));
        } else {
            shaped.push_back(P);
        }
    }
    check_family_shape(F, shaped, code.point_spec().n, l, h, hat);

    const FieldElement& beta = code.point_spec().beta;
    std::vector<SigmaPoly> members;
    members.reserve(shaped.size());
    for (const SigmaPoly& P : shaped) members.push_back(scale_transform(P, beta).shift_post(j));

    WitnessReport rep;
    rep.mode = hat ? WitnessMode::SubfieldBasisHat : WitnessMode::SubfieldBasis;
    rep.l = l;
    rep.h = h;
    rep.j = j;
    rep.family_spec = family.spec;
    rep.family_size = family.members.size();
    rep.bound = Big(family.members.size());
    assemble_report(code, std::move(members), n - l, opts, rep);
    return rep;
}

}  // namespace

WitnessReport build_witness_general(const EvalCode& code, uint32_t tau, uint32_t h, uint32_t j,
                                    const WitnessOptions& opts) {
    const Field& F = code.field();
    const uint32_t n = code.n();
    const uint32_t d = code.min_distance(opts.budget);
    if (tau < unique_radius(d) + 1)
        throw HypothesisViolation("tau >= floor((d-1)/2)+1 violated (unique decoding radius)");
    if (tau > d - 1) throw HypothesisViolation("tau <= d-1 violated");
    if (j >= tau) throw HypothesisViolation("j < tau violated");
    if (h < 1 || tau + h > n)
        throw HypothesisViolation("agreement count n-h-tau+1 >= 1 violated (need tau <= n-h)");
    if (!code.contains_window(j, j + h - 1))
        throw HypothesisViolation("code does not contain the shifted window [j, j+h-1]");

    PigeonholeResult ph = pigeonhole_family(F, code.points(), n - tau, n - h - tau + 1);
    std::vector<SigmaPoly> members;
    members.reserve(ph.members.size());
    for (const SigmaPoly& f : ph.members) members.push_back(f.shift_pre(j));

    WitnessReport rep;
    rep.mode = WitnessMode::GeneralBasis;
    rep.tau = tau;
    rep.h = h;
    rep.j = j;
    rep.bound = ph.bound;
    rep.family_size = ph.members.size();
    rep.pigeonhole_key = ph.key;
    rep.pigeonhole_groups = ph.group_count;
    assemble_report(code, std::move(members), tau, opts, rep);
    return rep;
}

WitnessReport build_witness_subfield(const EvalCode& code, uint32_t l, uint32_t h, uint32_t j,
                                     const SubspacePolyFamily& family,
                                     const WitnessOptions& opts) {
    return subfield_witness_impl(code, l, h, j, family, /*hat=*/false, opts);
}

WitnessReport build_witness_subfield_hat(const EvalCode& code, uint32_t l, uint32_t h, uint32_t j,
                                         const SubspacePolyFamily& family,
                                         const WitnessOptions& opts) {
    return subfield_witness_impl(code, l, h, j, family, /*hat=*/true, opts);
}

bool verify_witness(const EvalCode& code, WitnessReport& report, bool exhaustive,
                    const Big& budget) {
    const Field& F = code.field();
    bool ok = !code.contains(report.w);
    std::set<std::vector<uint64_t>> seen;
    for (const auto& word : report.list) {
        if (!code.contains(word)) ok = false;
        if (rank_distance(F, report.w, word) > report.radius) ok = false;
        std::vector<uint64_t> key;
        for (const auto& c : word) key.push_back(F.index_of(c));
        seen.insert(std::move(key));
    }
    if (seen.size() != report.list.size()) ok = false;
    if (Big(report.list.size()) < report.bound) ok = false;
    if (exhaustive) {
        report.checks.exhaustive_count = count_in_ball(code, report.w, report.radius, budget);
        report.checks.exhaustive_done = true;
        if (report.checks.exhaustive_count < report.bound) ok = false;
        if (report.checks.exhaustive_count < Big(report.list.size())) ok = false;
    }
    return ok;
}

// --- theorem analyzer -----------------------------------------------------------

namespace {

struct Gates {
    const EvalCode& code;
    uint32_t n, d, ud;
    uint64_t q;
    bool subfield_points;
    uint32_t level;  // point-basis level when subfield_points
};

std::optional<uint32_t> pick_shift(const EvalCode& code, uint32_t h, uint32_t jmax_exclusive) {
    for (uint32_t j = 0; j < jmax_exclusive; ++j) {
        if (code.contains_window(j, j + h - 1)) return j;
    }
    return std::nullopt;
}

Claim base_claim(std::string id) {
    Claim c;
    c.theorem_id = std::move(id);
    return c;
}

void finish_applicable(Claim& c, uint32_t threshold, uint32_t ud, WitnessRecipe recipe) {
    c.applicable = true;
    c.radius_threshold = threshold;
    c.at_all = threshold == ud + 1;
    c.recipe = std::move(recipe);
}

/// Trace-family recipe at parameter t: l = n-t, h = n-2t+1.
std::optional<WitnessRecipe> trace_recipe(const Gates& g, uint32_t t,
                                          std::optional<uint32_t> forced_j = {}) {
    const uint32_t n = g.n;
    if (2 * t > n) return std::nullopt;  // window width n-2t+1 degenerates
    const uint32_t h = n - 2 * t + 1, l = n - t;
    std::optional<uint32_t> j = forced_j;
    if (!j) j = pick_shift(g.code, h, t);  // executable gate: j < n-l = t
    if (!j || !g.code.contains_window(*j, *j + h - 1)) return std::nullopt;
    WitnessRecipe r;
    r.mode = WitnessMode::SubfieldBasis;
    r.l = l;
    r.h = h;
    r.j = *j;
    r.family = FamilySpec{FamilyKind::Trace, n, t, 0, 0, {}, 0, 0};
    return r;
}

void claim_binomial(std::vector<Claim>& out, const Gates& g) {
    Claim c = base_claim("binomial_radius");
    if (!g.subfield_points) {
        c.failed_hypothesis = "evaluation points are not a subfield basis";
        out.push_back(std::move(c));
        return;
    }
    const uint32_t n = g.n;
    for (uint32_t t = n - g.ud - 1; t + g.d >= n + 1 && t >= 1; --t) {
        if (n % t != 0 || t > n - 1) {
            if (t == 1) break;
            continue;
        }
        if (std::gcd(g.code.field().s(), n) != 1) break;
        auto j = pick_shift(g.code, 1, n - t);
        if (j) {
            WitnessRecipe r;
            r.mode = WitnessMode::SubfieldBasis;
            r.l = t;
            r.h = 1;
            r.j = *j;
            r.family = FamilySpec{FamilyKind::Binomial, n, t, 0, 0, {}, 0, 0};
            finish_applicable(c, n - t, g.ud, std::move(r));
            out.push_back(std::move(c));
            return;
        }
        if (t == 1) break;
    }
    c.failed_hypothesis = "no divisor t of n with n-d+1 <= t <= n-floor((d-1)/2)-1 and a contained window";
    out.push_back(std::move(c));
}

void claim_trace(std::vector<Claim>& out, const Gates& g) {
    Claim c = base_claim("trace_radius");
    if (!g.subfield_points) {
        c.failed_hypothesis = "evaluation points are not a subfield basis";
        out.push_back(std::move(c));
        return;
    }
    const uint32_t n = g.n;
    for (uint32_t t = g.ud + 1; t <= g.d - 1; ++t) {
        if (n % t != 0) continue;
        if (2 * t > n) continue;  // degenerate window width n-2t+1 <= 0: inapplicable
        const uint32_t h = n - 2 * t + 1;
        if (t < 2) continue;  // the stated gate j < t-1 needs t >= 2
        auto j = pick_shift(g.code, h, t - 1);  // stated gate: j < t-1
        if (!j) continue;
        auto recipe = trace_recipe(g, t, j);
        if (!recipe) continue;
        finish_applicable(c, t, g.ud, std::move(*recipe));
        out.push_back(std::move(c));
        return;
    }
    c.failed_hypothesis =
        "no divisor t of n with floor((d-1)/2)+1 <= t <= d-1, n-2t+1 >= 1 and j < t-1 fitting";
    out.push_back(std::move(c));
}

void claim_trinomial(std::vector<Claim>& out, const Gates& g, bool variant2) {
    Claim c = base_claim(variant2 ? "trinomial2_radius" : "trinomial1_radius");
    if (!g.subfield_points) {
        c.failed_hypothesis = "evaluation points are not a subfield basis";
        out.push_back(std::move(c));
        return;
    }
    const Field& F = g.code.field();
    const uint32_t n = g.n;
    auto char_power = [&](uint32_t v, uint32_t base) {
        if (v == 0) return false;
        while (v % base == 0) v /= base;
        return v == 1;
    };
    for (uint32_t t = n - g.ud - 1; t + g.d >= n + 1 && t >= 2; --t) {
        bool shape_ok = variant2
                            ? (n == t * t - 1 && F.characteristic() == 2 && char_power(t, 2))
                            : (n == t * (t - 1) + 1 && char_power(t - 1, F.characteristic()));
        if (!shape_ok) continue;
        auto j = pick_shift(g.code, 2, n - t);  // window width h = 2, gate j < n-t
        if (!j) continue;
        WitnessRecipe r;
        r.mode = WitnessMode::SubfieldBasis;
        r.l = t;
        r.h = 2;
        r.j = *j;
        r.family = FamilySpec{variant2 ? FamilyKind::Tri2 : FamilyKind::Tri1, n, t, 0, 0, {}, 0, 0};
        finish_applicable(c, n - t, g.ud, std::move(r));
        out.push_back(std::move(c));
        return;
    }
    c.failed_hypothesis = variant2 ? "no t with n = t^2-1, t and q powers of 2, in range, window fitting"
                                   : "no t with n = t(t-1)+1, t-1 a characteristic power, in range, window fitting";
    out.push_back(std::move(c));
}

void claim_progression(std::vector<Claim>& out, const Gates& g, bool adjoint) {
    Claim c = base_claim(adjoint ? "progression_adjoint_radius" : "progression_radius");
    if (!g.subfield_points) {
        c.failed_hypothesis = "evaluation points are not a subfield basis";
        out.push_back(std::move(c));
        return;
    }
    const Field& F = g.code.field();
    const uint32_t n = g.n;
    const uint32_t p = F.characteristic();
    struct Best {
        uint32_t threshold = UINT32_MAX;
        WitnessRecipe recipe;
    };
    std::optional<Best> best;
    for (uint32_t r = 0;; ++r) {
        uint64_t qprime = 1;
        for (uint32_t i = 0; i < r; ++i) qprime *= p;
        if (r > 0 && qprime >= n) break;  // then p_k > n for every k >= 2
        for (uint32_t k = 2;; ++k) {
            // p_i = 1 + q' + ... + q'^i
            std::vector<uint64_t> pseq;
            uint64_t pi = 0, pw = 1;
            for (uint32_t i = 0; i <= k; ++i) {
                pi += pw;
                pw *= qprime;
                pseq.push_back(pi);
            }
            if (pseq[k] > n) break;
            if (n % pseq[k] != 0) continue;
            const uint64_t t = n / pseq[k];
            uint64_t radius = t * (pseq[k] - pseq[k - 1]);  // = t q'^k
            if (radius < g.ud + 1 || radius > g.d - 1) continue;
            const uint32_t l = static_cast<uint32_t>(t * pseq[k - 1]);
            const uint32_t h = adjoint ? static_cast<uint32_t>(t * (pseq[k - 1] - 1) + 1)
                                       : static_cast<uint32_t>(t * pseq[k - 2] + 1);
            if (h > l) continue;
            auto j = pick_shift(g.code, h, static_cast<uint32_t>(radius));
            if (!j) continue;
            WitnessRecipe rec;
            rec.mode = WitnessMode::SubfieldBasis;
            rec.l = l;
            rec.h = h;
            rec.j = *j;
            rec.family = FamilySpec{adjoint ? FamilyKind::QPrime : FamilyKind::Q,
                                    n,
                                    static_cast<uint32_t>(t),
                                    k,
                                    r,
                                    {},
                                    0,
                                    0};
            if (!best || radius < best->threshold) best = Best{static_cast<uint32_t>(radius), rec};
        }
    }
    if (best) {
        finish_applicable(c, best->threshold, g.ud, std::move(best->recipe));
        out.push_back(std::move(c));
        return;
    }
    c.failed_hypothesis = "no (t, k, r) with n = t p_k and the radius t q'^k in range with a fitting window";
    out.push_back(std::move(c));
}

void claim_gabidulin_at_all(std::vector<Claim>& out, const Gates& g) {
    Claim c = base_claim("gabidulin_at_all");
    if (g.code.descriptor().kind != CodeDescriptor::Kind::Gabidulin) {
        c.failed_hypothesis = "code is not a plain Gabidulin evaluation code";
        out.push_back(std::move(c));
        return;
    }
    if (!g.subfield_points) {
        c.failed_hypothesis = "evaluation points are not a subfield basis";
        out.push_back(std::move(c));
        return;
    }
    const uint32_t n = g.n;
    for (uint32_t t = g.ud + 1; t <= g.d - 1; ++t) {
        if (n % t != 0 || 2 * t > n) continue;
        auto recipe = trace_recipe(g, t);
        if (!recipe) continue;
        finish_applicable(c, t, g.ud, std::move(*recipe));
        out.push_back(std::move(c));
        return;
    }
    c.failed_hypothesis = "no divisor t of n in [floor((d-1)/2)+1, d-1] with n-2t+1 >= 1";
    out.push_back(std::move(c));
}

void claim_twisted(std::vector<Claim>& out, const Gates& g, bool near_mrd) {
    Claim c = base_claim(near_mrd ? "twisted_near_mrd" : "twisted_mrd_at_all");
    const auto& desc = g.code.descriptor();
    const bool h_like = desc.kind == CodeDescriptor::Kind::Hf1f2 ||
                        desc.kind == CodeDescriptor::Kind::TwistedSheekey;
    if (!h_like || desc.f2.is_zero_map()) {
        c.failed_hypothesis = "code is not a twisted family code with f2 != 0";
        out.push_back(std::move(c));
        return;
    }
    if (!g.subfield_points) {
        c.failed_hypothesis = "evaluation points are not a subfield basis";
        out.push_back(std::move(c));
        return;
    }
    const uint32_t n = g.n, k = desc.k;
    const uint32_t expected_d = near_mrd ? n - k : n - k + 1;
    if (g.d != expected_d) {
        c.failed_hypothesis = near_mrd ? "minimum distance is not n-k" : "minimum distance is not n-k+1";
        out.push_back(std::move(c));
        return;
    }
    const bool nk_odd = (n - k) % 2 == 1;
    uint32_t tmin = near_mrd ? g.ud + 2 : (nk_odd ? g.ud + 2 : g.ud + 1);
    for (uint32_t t = tmin; t <= g.d - 1; ++t) {
        if (n % t != 0 || 2 * t > n) continue;
        auto recipe = trace_recipe(g, t);
        if (!recipe) continue;
        finish_applicable(c, t, g.ud, std::move(*recipe));
        out.push_back(std::move(c));
        return;
    }
    c.failed_hypothesis = "no divisor t of n in the stated range with a fitting window";
    out.push_back(std::move(c));
}

void claim_omitted(std::vector<Claim>& out, const Gates& g, bool top_variant) {
    Claim c = base_claim(top_variant ? "omitted_monomial_top" : "omitted_monomial");
    const auto& desc = g.code.descriptor();
    if (desc.kind != CodeDescriptor::Kind::Cj) {
        c.failed_hypothesis = "code does not omit an inner monomial";
        out.push_back(std::move(c));
        return;
    }
    if (!g.subfield_points) {
        c.failed_hypothesis = "evaluation points are not a subfield basis";
        out.push_back(std::move(c));
        return;
    }
    const uint32_t n = g.n, k = desc.k, j0 = desc.j;
    if (top_variant && j0 != k - 2) {
        c.failed_hypothesis = "omitted index is not k-2";
        out.push_back(std::move(c));
        return;
    }
    uint32_t tmin = g.ud + 1, tmax = g.d - 1;
    if (top_variant) {
        if (g.d == n - k + 1) {
            if ((n - k) % 2 == 1) tmin = g.ud + 2;
        } else if (g.d == n - k) {
            tmin = g.ud + 2;  // strict bound
        } else {
            c.failed_hypothesis = "minimum distance is neither n-k+1 nor n-k";
            out.push_back(std::move(c));
            return;
        }
    } else {
        // stated threshold uses the larger free side of the omitted index
        const uint32_t M = std::max(j0, k - j0 - 1);
        const uint32_t stated =
            M == j0 ? (n - j0 + 2) / 2 : (n - k + j0) / 2 + 1;  // ceil((n-j0+1)/2) resp. floor+1
        tmin = std::max(tmin, stated);
    }
    for (uint32_t t = tmin; t <= tmax; ++t) {
        if (n % t != 0 || 2 * t > n) continue;
        auto recipe = trace_recipe(g, t);
        if (!recipe) continue;
        finish_applicable(c, t, g.ud, std::move(*recipe));
        out.push_back(std::move(c));
        return;
    }
    c.failed_hypothesis = "no divisor t of n in the stated range with a window beside the omitted index";
    out.push_back(std::move(c));
}

}  // namespace

std::vector<Claim> analyze_decodability(const EvalCode& code, const Big& budget) {
    Gates g{code,
            code.n(),
            code.min_distance(budget),
            0,
            code.field().q(),
            code.point_spec().kind == PointSpec::Kind::SubfieldBasis,
            code.point_spec().n};
    g.ud = unique_radius(g.d);
    std::vector<Claim> out;
    claim_binomial(out, g);
    claim_trace(out, g);
    claim_trinomial(out, g, false);
    claim_trinomial(out, g, true);
    claim_progression(out, g, false);
    claim_progression(out, g, true);
    claim_gabidulin_at_all(out, g);
    claim_twisted(out, g, false);
    claim_twisted(out, g, true);
    claim_omitted(out, g, false);
    claim_omitted(out, g, true);
    return out;
}

WitnessReport run_recipe(const EvalCode& code, const WitnessRecipe& recipe,
                         const WitnessOptions& opts) {
    switch (recipe.mode) {
        case WitnessMode::GeneralBasis:
            return build_witness_general(code, recipe.tau, recipe.h, recipe.j, opts);
        case WitnessMode::SubfieldBasis: {
            if (!recipe.family) throw ParamViolation("subfield recipe needs a family spec");
            SubspacePolyFamily fam = generate_family(code.field(), *recipe.family);
            return build_witness_subfield(code, recipe.l, recipe.h, recipe.j, fam, opts);
        }
        case WitnessMode::SubfieldBasisHat: {
            if (!recipe.family) throw ParamViolation("subfield recipe needs a family spec");
            SubspacePolyFamily fam = generate_family(code.field(), *recipe.family);
            return build_witness_subfield_hat(code, recipe.l, recipe.h, recipe.j, fam, opts);
        }
    }
    throw ParamViolation("unknown witness mode");
}

}  // namespace rmlist
