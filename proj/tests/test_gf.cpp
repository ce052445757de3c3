#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rmlist/gf.hpp"

using namespace rmlist;

TEST_CASE("canonical moduli are the classical ones") {
    Field f16(2, 1, 4, 1);
    CHECK(f16.modulus() == std::vector<uint32_t>{1, 1, 0, 0, 1});  // x^4+x+1
    Field f27(3, 1, 3, 1);
    CHECK(f27.size() == 27);
    CHECK(f27.modulus().back() == 1);
}

TEST_CASE("field construction guards") {
    CHECK_THROWS_AS(Field(4, 1, 4, 1), ParamViolation);   // p not prime
    CHECK_THROWS_AS(Field(2, 1, 1, 1), ParamViolation);   // m too small
    CHECK_THROWS_AS(Field(2, 1, 4, 2), ParamViolation);   // gcd(s, m) != 1
    CHECK_THROWS_AS(Field(2, 1, 21, 1), ParamViolation);  // beyond desk scale
    FieldParams bad{2, 1, 4, 1, {1, 0, 0, 0, 1}};         // x^4+1 reducible
    CHECK_THROWS_AS((Field{bad}), ParamViolation);
}

TEST_CASE("field axioms hold on all of GF(16) and GF(27)") {
    for (auto params : {std::pair{2u, 4u}, std::pair{3u, 3u}}) {
        Field F(params.first, 1, params.second, 1);
        for (uint64_t i = 0; i < F.size(); ++i) {
            FieldElement a = F.from_index(i);
            CHECK(F.add(a, F.zero()) == a);
            CHECK(F.index_of(a) == i);
            if (!F.is_zero(a)) {
                CHECK(F.mul(a, F.inv(a)) == F.one());
                CHECK(F.div(a, a) == F.one());
            }
            if (params.first == 2) CHECK(F.is_zero(F.add(a, a)));
        }
        CHECK_THROWS_AS(F.inv(F.zero()), DivisionByZero);
        CHECK_THROWS_AS(F.div(F.one(), F.zero()), DivisionByZero);
    }
}

TEST_CASE("frobenius is a field automorphism fixing exactly GF(q)") {
    Field F(2, 1, 4, 1);
    int fixed = 0;
    for (uint64_t i = 0; i < 16; ++i) {
        FieldElement a = F.from_index(i);
        CHECK(F.frobenius(a, 0) == a);
        CHECK(F.frobenius(a, 4) == a);  // sigma^m = id
        CHECK(F.frobenius(a, -1) == F.frobenius(a, 3));
        if (F.frobenius(a, 1) == a) ++fixed;
        for (uint64_t jj = 0; jj < 16; ++jj) {
            FieldElement b = F.from_index(jj);
            CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
            CHECK(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
        }
    }
    CHECK(fixed == 2);  // exactly {0, 1}
}

TEST_CASE("frobenius multiplicativity is exhaustive at q^m = 2^12") {
    Field F(2, 1, 12, 1);
    // all pairs is 2^24 products; sample rows exhaustively against all columns
    for (uint64_t i = 0; i < F.size(); i += 7) {
        FieldElement a = F.from_index(i);
        for (uint64_t jj = 0; jj < F.size(); jj += 13) {
            FieldElement b = F.from_index(jj);
            CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
        }
    }
}

TEST_CASE("relative trace and norm") {
    Field F(2, 1, 2, 1);  // GF(4)
    // Tr_{GF(4)/GF(2)}(1) = 1 + 1 = 0
    CHECK(F.is_zero(F.rel_trace(F.one(), 2, 1)));
    // N(alpha) = alpha^3 = 1 for every nonzero alpha
    for (uint64_t i = 1; i < 4; ++i) CHECK(F.rel_norm(F.from_index(i), 2, 1) == F.one());
    CHECK(F.is_zero(F.rel_norm(F.zero(), 2, 1)));

    Field G(2, 1, 6, 1);
    CHECK_THROWS_AS(G.rel_trace(G.one(), 6, 4), NonDivisorDegree);  // 4 does not divide 6
    CHECK_THROWS_AS(G.rel_norm(G.one(), 5, 1), NonDivisorDegree);   // 5 does not divide m
    // trace is GF(q^r)-linear and surjective onto the subfield (exhaustive)
    std::set<uint64_t> image;
    for (uint64_t i = 0; i < G.size(); ++i) {
        FieldElement t = G.rel_trace(G.from_index(i), 6, 2);
        CHECK(G.in_subfield(t, 2));
        image.insert(G.index_of(t));
    }
    CHECK(image.size() == 4);
    // norm is multiplicative with order dividing q^r - 1
    for (uint64_t i = 1; i < G.size(); i += 5) {
        FieldElement n = G.rel_norm(G.from_index(i), 6, 3);
        CHECK(G.in_subfield(n, 3));
        CHECK(G.pow(n, int64_t{7}) == G.one());
    }
}

TEST_CASE("subfield lattice and bases") {
    Field F(2, 1, 6, 1);
    CHECK(F.subfield_basis(1).size() == 1);
    CHECK(F.subfield_basis(2).size() == 2);
    CHECK(F.subfield_basis(3).size() == 3);
    CHECK(F.subfield_basis(6).size() == 6);
    CHECK_THROWS_AS(F.subfield_basis(4), NonDivisorDegree);
    auto sub = F.subfield_elements(3);
    CHECK(sub.size() == 8);
    for (const auto& a : sub) {
        CHECK(F.in_subfield(a, 3));
        CHECK(F.frobenius_q(a, 3) == a);
    }
    // GF(4) and GF(8) intersect in GF(2) inside GF(64)
    auto sub2 = F.subfield_elements(2);
    std::set<uint64_t> s3;
    for (const auto& a : sub) s3.insert(F.index_of(a));
    int common = 0;
    for (const auto& a : sub2)
        if (s3.count(F.index_of(a))) ++common;
    CHECK(common == 2);
}

TEST_CASE("GF(q)-coordinates round-trip and index layer") {
    Field F(2, 2, 3, 1);  // q = 4, m = 3, GF(64) as a GF(4)-space
    CHECK(F.q() == 4);
    CHECK(F.prime_degree() == 6);
    for (uint64_t i = 0; i < F.size(); ++i) {
        FieldElement a = F.from_index(i);
        auto qc = F.qcoords(a);
        REQUIRE(qc.size() == 3);
        CHECK(F.from_qcoords(qc) == a);
    }
    // index tables agree with field arithmetic
    for (uint32_t u = 0; u < 4; ++u) {
        for (uint32_t v = 0; v < 4; ++v) {
            CHECK(F.q_elem(F.q_add(u, v)) == F.add(F.q_elem(u), F.q_elem(v)));
            CHECK(F.q_elem(F.q_mul(u, v)) == F.mul(F.q_elem(u), F.q_elem(v)));
        }
        if (u) CHECK(F.q_mul(u, F.q_inv(u)) == 1);
    }
    CHECK(F.q_index(F.zero()) == 0);
    CHECK(F.q_index(F.one()) == 1);
    CHECK_THROWS_AS(F.q_index(F.multiplicative_generator()), FieldMismatch);
}

TEST_CASE("multiplicative generator has full order") {
    for (auto params : {std::tuple{2u, 1u, 4u}, std::tuple{3u, 1u, 3u}, std::tuple{2u, 2u, 3u}}) {
        Field F(std::get<0>(params), std::get<1>(params), std::get<2>(params), 1);
        FieldElement g = F.multiplicative_generator();
        uint64_t order = 1;
        FieldElement t = g;
        while (!(t == F.one())) {
            t = F.mul(t, g);
            ++order;
        }
        CHECK(order == F.size() - 1);
    }
}

TEST_CASE("exponent reduction in sigma-powers") {
    Field F7(2, 1, 7, 1);
    SigmaPower num[] = {{1, 7}, {-1, 1}};
    SigmaPower den[] = {{1, 3}, {-1, 0}};
    CHECK(exponent_reduce(F7, 7, num, den) == 18);  // (2^7-2)/(2^3-1)

    SigmaPower zeros[] = {{1, 1}, {-1, 1}};
    CHECK(exponent_reduce(F7, 7, zeros, den) == 0);

    // k(q^n - 1) reduces to 0
    SigmaPower full[] = {{127, 0}};
    SigmaPower unit[] = {{1, 0}};
    CHECK(exponent_reduce(F7, 7, full, unit) == 0);

    SigmaPower bad_num[] = {{1, 2}, {1, 0}};  // q^2 + 1 = 5 not divisible by 7
    CHECK_THROWS_AS(exponent_reduce(F7, 7, bad_num, den), NonIntegerExponent);
    SigmaPower zero_den[] = {{1, 1}, {-1, 1}};
    CHECK_THROWS_AS(exponent_reduce(F7, 7, unit, zero_den), ParamViolation);
}

TEST_CASE("explicit modulus round-trips through params") {
    Field F(2, 1, 4, 1);
    FieldParams p = F.params();
    Field G(p);
    CHECK(G.modulus() == F.modulus());
    CHECK(G.size() == F.size());
    CHECK(G.mul(G.x(), G.x()) == F.mul(F.x(), F.x()));
}
