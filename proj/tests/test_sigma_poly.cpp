#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "rmlist/sigma_poly.hpp"

using namespace rmlist;

namespace {

SigmaPoly random_poly(const Field& F, std::mt19937& rng, uint32_t max_deg) {
    std::uniform_int_distribution<uint64_t> dist(0, F.size() - 1);
    std::vector<FieldElement> c(max_deg + 1, F.zero());
    for (auto& ci : c) ci = F.from_index(dist(rng));
    return SigmaPoly::from_coeffs(F, std::move(c));
}

/// Independent root-counting oracle for kernel dimensions.
uint32_t kernel_dim_by_roots(const SigmaPoly& f) {
    const Field& F = f.field();
    uint64_t roots = 0;
    for (uint64_t i = 0; i < F.size(); ++i) {
        if (F.is_zero(f(F.from_index(i)))) ++roots;
    }
    uint32_t dim = 0;
    uint64_t qd = 1;
    while (qd < roots) {
        qd *= F.q();
        ++dim;
    }
    REQUIRE(qd == roots);  // root counts of sigma-polynomials are q-powers
    return dim;
}

/// Moore-determinant construction by cofactor expansion, used as an oracle
/// against the incremental builder.
SigmaPoly moore_by_determinant(const Field& F, std::span<const FieldElement> basis) {
    const uint32_t r = static_cast<uint32_t>(basis.size());
    // minor determinant of the rows (u_i^{sigma^c}) over the chosen columns
    auto minor_det = [&](const std::vector<uint32_t>& cols) {
        std::vector<std::vector<FieldElement>> a(r, std::vector<FieldElement>(r, F.zero()));
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t c = 0; c < r; ++c) a[i][c] = F.frobenius(basis[i], cols[c]);
        FieldElement det = F.one();
        std::vector<std::vector<FieldElement>> mtx = a;
        for (uint32_t col = 0, row = 0; col < r && row < r; ++col, ++row) {
            uint32_t sel = row;
            while (sel < r && F.is_zero(mtx[sel][col])) ++sel;
            if (sel == r) return F.zero();  // singular minor: the coefficient vanishes
            if (sel != row) {
                std::swap(mtx[sel], mtx[row]);
                det = F.neg(det);
            }
            det = F.mul(det, mtx[row][col]);
            FieldElement inv = F.inv(mtx[row][col]);
            for (uint32_t rr = row + 1; rr < r; ++rr) {
                FieldElement fctr = F.mul(mtx[rr][col], inv);
                for (uint32_t cc = col; cc < r; ++cc)
                    mtx[rr][cc] = F.sub(mtx[rr][cc], F.mul(fctr, mtx[row][cc]));
            }
        }
        return det;
    };
    // coefficient of x^{sigma^t} carries sign (-1)^{r+t} from the first-row
    // cofactor expansion; normalize to monic at the end
    std::vector<FieldElement> coeffs(r + 1, F.zero());
    for (uint32_t t = 0; t <= r; ++t) {
        std::vector<uint32_t> cols;
        for (uint32_t c = 0; c <= r; ++c)
            if (c != t) cols.push_back(c);
        FieldElement term = minor_det(cols);
        if ((r + t) % 2 == 1) term = F.neg(term);
        coeffs[t] = term;
    }
    SigmaPoly s = SigmaPoly::from_coeffs(F, std::move(coeffs));
    return s.scaled(F.inv(s.coeff(static_cast<uint32_t>(s.degree()))));
}

}  // namespace

TEST_CASE("evaluation basics") {
    Field F(2, 1, 4, 1);
    SigmaPoly frob_minus_id = SigmaPoly::monomial(F, 1, F.one()) - SigmaPoly::identity(F);
    // sigma fixes GF(q)
    CHECK(F.is_zero(frob_minus_id(F.zero())));
    CHECK(F.is_zero(frob_minus_id(F.one())));
    CHECK(!F.is_zero(frob_minus_id(F.multiplicative_generator())));
    // additivity forces f(0) = 0
    std::mt19937 rng(7);
    for (int it = 0; it < 5; ++it) CHECK(F.is_zero(random_poly(F, rng, 3)(F.zero())));
    // trace polynomial is balanced over GF(16)
    SigmaPoly tr = trace_poly(F, 1);
    std::map<uint64_t, int> counts;
    for (uint64_t i = 0; i < 16; ++i) ++counts[F.index_of(tr(F.from_index(i)))];
    CHECK(counts[0] == 8);
    CHECK(counts[1] == 8);
}

TEST_CASE("reduction soundness: reduce mod x^{sigma^m} - x preserves the map") {
    Field F(2, 1, 5, 1);
    std::mt19937 rng(11);
    std::uniform_int_distribution<uint64_t> dist(0, F.size() - 1);
    for (int it = 0; it < 10; ++it) {
        // build an unreduced coefficient list of length up to 2m and compare
        std::vector<FieldElement> long_coeffs(2 * F.m(), F.zero());
        for (auto& c : long_coeffs) c = F.from_index(dist(rng));
        SigmaPoly reduced = SigmaPoly::from_coeffs(F, long_coeffs);
        CHECK(reduced.degree() < static_cast<int>(F.m()));
        for (uint64_t i = 0; i < F.size(); ++i) {
            FieldElement x = F.from_index(i);
            FieldElement direct = F.zero();
            for (size_t t = 0; t < long_coeffs.size(); ++t)
                direct = F.add(direct, F.mul(long_coeffs[t], F.frobenius(x, static_cast<int64_t>(t))));
            CHECK(reduced(x) == direct);
        }
    }
}

TEST_CASE("composition matches pointwise application on GF(2^6)") {
    Field F(2, 1, 6, 1);
    std::mt19937 rng(13);
    for (int it = 0; it < 6; ++it) {
        SigmaPoly f = random_poly(F, rng, 4), g = random_poly(F, rng, 3);
        SigmaPoly fg = f.compose(g);
        for (uint64_t i = 0; i < F.size(); ++i) {
            FieldElement c = F.from_index(i);
            CHECK(fg(c) == f(g(c)));
        }
    }
    // identities
    SigmaPoly f = random_poly(F, rng, 4);
    CHECK(f.compose(SigmaPoly::identity(F)) == f);
    SigmaPoly xs = SigmaPoly::monomial(F, 1, F.one());
    CHECK(xs.compose(xs) == SigmaPoly::monomial(F, 2, F.one()));
}

TEST_CASE("adjoint satisfies the trace bilinear identity on all pairs") {
    for (auto params : {std::pair{2u, 4u}, std::pair{3u, 3u}}) {
        Field F(params.first, 1, params.second, 1);
        std::mt19937 rng(17);
        for (int it = 0; it < 4; ++it) {
            SigmaPoly f = random_poly(F, rng, F.m() - 1);
            if (f.is_zero()) continue;
            SigmaPoly fh = adjoint(f);
            for (uint64_t i = 0; i < F.size(); ++i) {
                for (uint64_t jj = 0; jj < F.size(); ++jj) {
                    FieldElement x = F.from_index(i), y = F.from_index(jj);
                    CHECK(F.rel_trace(F.mul(f(x), y), 1) == F.rel_trace(F.mul(x, fh(y)), 1));
                }
            }
            CHECK(adjoint(fh) == f);                      // involution
            CHECK(kernel(fh).dim() == kernel(f).dim());   // kernel dimension preserved
        }
    }
    Field F(2, 1, 4, 1);
    CHECK_THROWS_AS(adjoint(SigmaPoly::zero(F)), ZeroPolynomial);
    // degree-0 polynomials are self-adjoint
    FieldElement a = F.multiplicative_generator();
    CHECK(adjoint(SigmaPoly::monomial(F, 0, a)) == SigmaPoly::monomial(F, 0, a));
    // adjoint(x^sigma) = x^{sigma^{m-1}}
    CHECK(adjoint(SigmaPoly::monomial(F, 1, F.one())) == SigmaPoly::monomial(F, 3, F.one()));
}

TEST_CASE("shifted adjoint preserves kernel dimension (exhaustive roots)") {
    Field F(2, 1, 6, 1);
    std::mt19937 rng(19);
    for (int it = 0; it < 8; ++it) {
        SigmaPoly f = random_poly(F, rng, 4);
        if (f.is_zero()) continue;
        SigmaPoly g = shifted_adjoint(f);
        CHECK(kernel_dim_by_roots(g) == kernel_dim_by_roots(f));
        CHECK(kernel(g).dim() == kernel(f).dim());
    }
    // f = x stays x
    CHECK(shifted_adjoint(SigmaPoly::identity(F)) == SigmaPoly::identity(F));
    // f = x^sigma - x over GF(2^4): kernel dims agree and equal 1
    Field F4(2, 1, 4, 1);
    SigmaPoly f = SigmaPoly::monomial(F4, 1, F4.one()) - SigmaPoly::identity(F4);
    SigmaPoly g = shifted_adjoint(f);
    CHECK(kernel(g).dim() == 1);
}

TEST_CASE("kernel, rank and the sigma-degree bound") {
    Field F(2, 1, 4, 1);
    SigmaPoly fr = SigmaPoly::monomial(F, 1, F.one()) - SigmaPoly::identity(F);
    FqSubspace K = kernel(fr);
    CHECK(K.dim() == 1);
    CHECK(K.contains(F.one()));
    CHECK(rank(fr) == 3);
    CHECK_THROWS_AS(kernel(SigmaPoly::zero(F)), ZeroPolynomial);

    // trace kernel has dimension m-1
    CHECK(kernel(trace_poly(F, 1)).dim() == 3);

    // matrix kernel agrees with the root-counting oracle; rank-nullity and
    // the sigma-degree bound hold
    std::mt19937 rng(23);
    for (int it = 0; it < 20; ++it) {
        SigmaPoly f = random_poly(F, rng, 3);
        if (f.is_zero()) continue;
        uint32_t km = kernel(f).dim();
        CHECK(km == kernel_dim_by_roots(f));
        CHECK(rank(f) + km == F.m());
        CHECK(km <= static_cast<uint32_t>(f.degree()));
    }

    // binomial with norm-one coefficient: kernel dimension equals t
    Field F2(2, 1, 4, 1);
    for (uint64_t i = 1; i < 16; ++i) {
        FieldElement a0 = F2.from_index(i);
        if (!(F2.rel_norm(a0, 4, 2) == F2.one())) continue;
        SigmaPoly f = SigmaPoly::monomial(F2, 2, F2.one()) - SigmaPoly::monomial(F2, 0, a0);
        CHECK(kernel(f).dim() == 2);
        CHECK(is_subspace_poly(f));
    }
}

TEST_CASE("maximum-kernel recognition") {
    Field F(2, 1, 4, 1);
    CHECK(is_subspace_poly(SigmaPoly::identity(F)));  // x: degree 0, kernel {0}
    // x^sigma is bijective: degree 1, kernel 0 -> not a subspace polynomial
    CHECK(!is_subspace_poly(SigmaPoly::monomial(F, 1, F.one())));
    CHECK(!is_subspace_poly(SigmaPoly::zero(F)));
    // non-monic max-kernel polynomial is rejected
    FieldElement g = F.multiplicative_generator();
    SigmaPoly f = (SigmaPoly::monomial(F, 1, F.one()) - SigmaPoly::identity(F)).scaled(g);
    CHECK(kernel(f).dim() == 1);
    CHECK(!is_subspace_poly(f));
}

TEST_CASE("subspace polynomial construction and the bijection with subspaces") {
    // q=2, m=4: U = span{1, g}
    Field F(2, 1, 4, 1);
    FieldElement g = F.multiplicative_generator();
    std::vector<FieldElement> basis = {F.one(), g};
    SigmaPoly sp = moore_subspace_poly(F, basis);
    CHECK(sp.is_monic());
    CHECK(sp.degree() == 2);
    uint32_t roots = 0;
    for (uint64_t i = 0; i < 16; ++i)
        if (F.is_zero(sp(F.from_index(i)))) ++roots;
    CHECK(roots == 4);
    CHECK(is_subspace_poly(sp));
    CHECK(sp == moore_by_determinant(F, basis));

    // degenerate and trivial cases
    CHECK(moore_subspace_poly(F, std::span<const FieldElement>{}) == SigmaPoly::identity(F));
    std::vector<FieldElement> dep = {F.one(), g, F.add(F.one(), g)};
    CHECK_THROWS_AS(moore_subspace_poly(F, dep), DependentBasis);
    std::vector<FieldElement> gf2 = {F.one()};
    CHECK(moore_subspace_poly(F, gf2) ==
          SigmaPoly::monomial(F, 1, F.one()) - SigmaPoly::identity(F));

    // bijection over all subspaces of GF(2^4) and GF(3^3)
    for (auto params : {std::pair{2u, 4u}, std::pair{3u, 3u}}) {
        Field G(params.first, 1, params.second, 1);
        std::set<std::vector<uint32_t>> seen;
        uint64_t count = 0;
        for (uint32_t r = 0; r < G.m(); ++r) {
            for_each_rref(G, G.m(), r, [&](const QMat& rref) {
                FqSubspace U = FqSubspace::from_rref(G, rref);
                SigmaPoly s = moore_subspace_poly(U);
                CHECK(kernel(s) == U);
                CHECK(is_subspace_poly(s));
                CHECK(s == moore_by_determinant(G, U.basis_elements()));
                seen.insert(s.key());
                ++count;
            });
        }
        CHECK(seen.size() == count);  // distinct subspaces, distinct polynomials
    }
}

TEST_CASE("FqSubspace canonical form and operations") {
    Field F(2, 1, 4, 1);
    FieldElement g = F.multiplicative_generator();
    std::vector<FieldElement> b1 = {F.one(), g};
    std::vector<FieldElement> b2 = {g, F.add(F.one(), g)};  // same span, different basis
    CHECK(FqSubspace::span_of(F, b1) == FqSubspace::span_of(F, b2));
    FqSubspace U = FqSubspace::span_of(F, b1);
    CHECK(U.dim() == 2);
    CHECK(U.elements().size() == 4);
    CHECK(U.contains(F.add(F.one(), g)));
    CHECK(!U.contains(F.mul(g, g)));
    CHECK(U.intersection_dim(U) == 2);
    CHECK(FqSubspace::zero_space(F).dim() == 0);
    // scaled subspace
    FqSubspace gU = U.scaled(g);
    CHECK(gU.dim() == 2);
    CHECK(gU.contains(F.mul(g, F.one())));
    CHECK_THROWS_AS(U.scaled(F.zero()), ZeroScalar);
}

TEST_CASE("rref enumeration visits each subspace once") {
    Field F(2, 1, 4, 1);
    uint64_t count = 0;
    std::set<QMat> seen;
    for_each_rref(F, 4, 2, [&](const QMat& mat) {
        ++count;
        seen.insert(mat);
    });
    CHECK(count == 35);  // [4 2]_2
    CHECK(seen.size() == 35);
}
