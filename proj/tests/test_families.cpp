#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rmlist/families.hpp"

using namespace rmlist;

namespace {

void check_family_soundness(const SubspacePolyFamily& fam) {
    CHECK(fam.members.size() == fam.expected_size);
    std::set<std::vector<uint32_t>> keys;
    for (const SigmaPoly& f : fam.members) {
        CHECK(f.degree() == static_cast<int>(fam.sigma_degree));
        CHECK(is_subspace_poly(f));
        keys.insert(f.key());
    }
    CHECK(keys.size() == fam.members.size());
}

}  // namespace

TEST_CASE("binomial family sizes and kernels") {
    Field F(2, 1, 4, 1);
    SubspacePolyFamily fam = gen_binomials(F, 4, 2);
    CHECK(fam.expected_size == 5);  // (2^4-1)/(2^2-1)
    check_family_soundness(fam);

    // q=2, n=2 inside GF(2^4): three binomials with distinct 1-dim kernels
    SubspacePolyFamily small = gen_binomials(F, 2, 1);
    CHECK(small.members.size() == 3);
    std::set<std::vector<uint32_t>> kernels_seen;
    for (const auto& f : small.members) {
        FqSubspace K = kernel(f);
        CHECK(K.dim() == 1);
        kernels_seen.insert(K.basis_matrix().a);
        // subfield lift: generated at level 2, max kernel inside GF(2^4)
        CHECK(is_subspace_poly(f));
    }
    CHECK(kernels_seen.size() == 3);

    CHECK_THROWS_AS(gen_binomials(F, 4, 4), ParamViolation);  // t = n
    CHECK_THROWS_AS(gen_binomials(F, 3, 1), ParamViolation);  // level does not divide m
}

TEST_CASE("trace family") {
    Field F(2, 1, 4, 1);
    SubspacePolyFamily fam = gen_trace_family(F, 4, 2);
    CHECK(fam.expected_size == 5);
    CHECK(fam.sigma_degree == 2);
    check_family_soundness(fam);

    // t = n: the single member x
    SubspacePolyFamily triv = gen_trace_family(F, 4, 4);
    CHECK(triv.members.size() == 1);
    CHECK(triv.members[0] == SigmaPoly::identity(F));

    Field F6(2, 1, 6, 1);
    SubspacePolyFamily nine = gen_trace_family(F6, 6, 3);
    CHECK(nine.expected_size == 9);
    check_family_soundness(nine);
}

TEST_CASE("first trinomial family at q=2, t=3, n=7") {
    Field F(2, 1, 7, 1);
    SubspacePolyFamily fam = gen_tri1(F, 7, 3);
    CHECK(fam.expected_size == 127);  // (2^7-1)/(2-1)
    CHECK(fam.sigma_degree == 3);
    CHECK(fam.members.size() == 127);
    // sampled members: kernel dimension 3 by independent root enumeration
    for (size_t idx : {size_t{0}, size_t{63}, size_t{126}}) {
        const SigmaPoly& f = fam.members[idx];
        uint64_t roots = 0;
        for (uint64_t i = 0; i < F.size(); ++i)
            if (F.is_zero(f(F.from_index(i)))) ++roots;
        CHECK(roots == 8);
        CHECK(is_subspace_poly(f));
    }
    CHECK_THROWS_AS(gen_tri1(F, 8, 3), ParamViolation);  // n != t(t-1)+1

    SubspacePolyFamily hat = gen_tri1_hat(F, 7, 3);
    CHECK(hat.members.size() == 127);
    check_family_soundness(hat);
}

TEST_CASE("second trinomial family at q=2, t=2, n=3") {
    Field F(2, 1, 3, 1);
    SubspacePolyFamily fam = gen_tri2(F, 3, 2);
    CHECK(fam.expected_size == 7);
    CHECK(fam.sigma_degree == 2);
    check_family_soundness(fam);
    // sampled kernel via roots over GF(2^3)
    uint64_t roots = 0;
    for (uint64_t i = 0; i < 8; ++i)
        if (F.is_zero(fam.members[0](F.from_index(i)))) ++roots;
    CHECK(roots == 4);

    SubspacePolyFamily hat = gen_tri2_hat(F, 3, 2);
    check_family_soundness(hat);

    Field F3(3, 1, 3, 1);
    CHECK_THROWS_AS(gen_tri2(F3, 3, 2), ParamViolation);  // q must be a power of 2
}

TEST_CASE("progression polynomial generalizes the relative trace") {
    // r = 0, t = 2, k = 2 -> n = 6: f = x + x^{sigma^2} + x^{sigma^4}
    Field F(2, 1, 6, 1);
    SigmaPoly f = gen_huang(F, 6, 2, 2, 0);
    CHECK(f == trace_poly(F, 2));
    CHECK(kernel(f).dim() == 4);

    // p = q = 2, r = 1, t = 1, k = 2 -> n = 7: f = x + x^sigma + x^{sigma^3}
    Field F7(2, 1, 7, 1);
    SigmaPoly g = gen_huang(F7, 7, 1, 2, 1);
    CHECK(g.support() == std::vector<uint32_t>{0, 1, 3});
    CHECK(kernel(g).dim() == 3);
    CHECK(is_subspace_poly(g));

    // adjoint variant: computed as the shifted adjoint, max kernel preserved
    SigmaPoly ga = gen_huang_adjoint(F7, 7, 1, 2, 1);
    CHECK(ga.support() == std::vector<uint32_t>{0, 2, 3});
    CHECK(kernel(ga).dim() == 3);
    CHECK(is_subspace_poly(ga));

    CHECK_THROWS_AS(gen_huang(F7, 7, 2, 2, 1), ParamViolation);  // n != t p_k
}

TEST_CASE("beta-scaling families of the progression polynomial") {
    Field F7(2, 1, 7, 1);
    SubspacePolyFamily q_fam = gen_q_family(F7, 7, 1, 2, 1);
    CHECK(q_fam.expected_size == 127);
    check_family_soundness(q_fam);
    // identical monomial support across members
    auto supp = q_fam.members.front().support();
    for (const auto& f : q_fam.members) CHECK(f.support() == supp);

    SubspacePolyFamily qp_fam = gen_q_prime_family(F7, 7, 1, 2, 1);
    CHECK(qp_fam.expected_size == 127);
    check_family_soundness(qp_fam);

    // r = 0 reduces to the trace family (same member sets)
    Field F6(2, 1, 6, 1);
    SubspacePolyFamily qr0 = gen_q_family(F6, 6, 2, 2, 0);
    SubspacePolyFamily tr = gen_trace_family(F6, 6, 2);
    REQUIRE(qr0.members.size() == tr.members.size());
    std::set<std::vector<uint32_t>> a, b;
    for (const auto& f : qr0.members) a.insert(f.key());
    for (const auto& f : tr.members) b.insert(f.key());
    CHECK(a == b);
}

TEST_CASE("scale transform moves kernels and keeps support") {
    Field F(2, 1, 4, 1);
    SigmaPoly f = SigmaPoly::monomial(F, 1, F.one()) - SigmaPoly::identity(F);
    FieldElement g = F.multiplicative_generator();

    CHECK(scale_transform(f, F.one()) == f);
    SigmaPoly fg = scale_transform(f, g);
    CHECK(is_subspace_poly(fg));
    CHECK(fg.support() == f.support());
    FqSubspace K = kernel(fg);
    CHECK(K.dim() == 1);
    CHECK(K.contains(g));  // kernel g * GF(2) = {0, g}
    CHECK(K == kernel(f).scaled(g));
    // alpha in GF(q)^*: kernel unchanged
    CHECK(kernel(scale_transform(f, F.one())) == kernel(f));
    CHECK_THROWS_AS(scale_transform(f, F.zero()), ZeroScalar);
}

TEST_CASE("pigeonhole family over a basis of GF(16)") {
    Field F(2, 1, 4, 1);
    std::vector<FieldElement> S = F.subfield_basis(4);
    PigeonholeResult res = pigeonhole_family(F, S, 2, 2);
    CHECK(res.subspace_count == 35);
    CHECK(res.bound == ceil_div(Big(35), Big(16)));  // ceil(35/16) = 3
    CHECK(Big(res.members.size()) >= res.bound);
    for (const auto& f : res.members) {
        CHECK(is_subspace_poly(f));
        CHECK(f.degree() == 2);
        // kernel containment in span(S) = GF(16)
        for (const auto& bvec : kernel(f).basis_elements()) CHECK(F.in_subfield(bvec, 4));
        // members agree on the top g coefficients
        CHECK(F.index_of(f.coeff(1)) == res.key[0]);
        CHECK(F.index_of(f.coeff(2)) == res.key[1]);
    }

    // g = 1 groups by the monic leader only: the whole set in one group
    PigeonholeResult all = pigeonhole_family(F, S, 2, 1);
    CHECK(all.group_count == 1);
    CHECK(all.members.size() == 35);

    CHECK_THROWS_AS(pigeonhole_family(F, S, 2, 3), ParamViolation);  // g > r
    std::vector<FieldElement> dep = {F.one(), F.one(), F.x()};
    CHECK_THROWS_AS(pigeonhole_family(F, dep, 1, 1), ParamViolation);
}

TEST_CASE("kernel containment within a proper span") {
    // points spanning a 3-dim subspace of GF(2^4); kernels must stay inside
    Field F(2, 1, 4, 1);
    std::vector<FieldElement> S = {F.one(), F.x(), F.mul(F.x(), F.x())};
    FqSubspace span = FqSubspace::span_of(F, S);
    PigeonholeResult res = pigeonhole_family(F, S, 2, 1);
    CHECK(res.members.size() == 7);  // [3 2]_2
    for (const auto& f : res.members) {
        for (const auto& b : kernel(f).basis_elements()) CHECK(span.contains(b));
    }
}

TEST_CASE("subfield lift of families re-read at a larger level") {
    // n = 2 members inside m = 4, and n = 3 members inside m = 6
    Field F4(2, 1, 4, 1);
    for (const auto& f : gen_binomials(F4, 2, 1).members) CHECK(is_subspace_poly(f));
    Field F6(2, 1, 6, 1);
    for (const auto& f : gen_binomials(F6, 3, 1).members) CHECK(is_subspace_poly(f));
    for (const auto& f : gen_trace_family(F6, 3, 1).members) CHECK(is_subspace_poly(f));
}

TEST_CASE("family dispatcher and adjoint transform") {
    Field F(2, 1, 4, 1);
    FamilySpec spec;
    spec.kind = FamilyKind::Trace;
    spec.n = 4;
    spec.t = 2;
    SubspacePolyFamily base = generate_family(F, spec);
    CHECK(base.members.size() == 5);

    spec.take_adjoint = true;
    SubspacePolyFamily adj = generate_family(F, spec);
    CHECK(adj.members.size() == 5);
    for (const auto& f : adj.members) {
        CHECK(f.coeff(0) == F.one());  // bottom-normalized by construction
        CHECK(kernel(f).dim() == 2);   // max kernel preserved
        CHECK(f.degree() == 2);
    }
}
