#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmlist/bigmath.hpp"
#include "rmlist/sigma_poly.hpp"

namespace rmlist {

enum class FamilyKind {
    Binomial,
    Trace,
    Tri1,
    Tri1Hat,
    Tri2,
    Tri2Hat,
    HuangF,
    HuangG,
    Q,
    QPrime,
    Pigeonhole,
};

const char* family_kind_name(FamilyKind k);
std::optional<FamilyKind> family_kind_from_name(const std::string& name);

/// Parameters of one enumerable family.  n is the subfield level the family
/// is defined at (members have coefficients in GF(q^n), n | m).  t, k, r are
/// the per-kind shape parameters; the pigeonhole generator instead takes a
/// point set, a subspace dimension and an agreement count.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Binomial;
    uint32_t n = 0;
    uint32_t t = 0;
    uint32_t k = 0;
    uint32_t r = 0;
    // pigeonhole only
    std::vector<FieldElement> points;
    uint32_t subspace_dim = 0;
    uint32_t agreement = 0;
    // replace every member by its shifted adjoint after generation (used to
    // seed the bottom-normalized affine sets; preserves kernel dimensions)
    bool take_adjoint = false;
};

struct SubspacePolyFamily {
    FamilySpec spec;
    uint64_t expected_size = 0;
    uint32_t sigma_degree = 0;
    std::vector<SigmaPoly> members;  // canonical enumeration order
};

/// x^{sigma^t} - a0 x with N_{q^n/q^t}(a0) = 1; size (q^n-1)/(q^t-1).
SubspacePolyFamily gen_binomials(const Field& F, uint32_t n, uint32_t t);

/// sum_i beta^{sigma^{it} - sigma^{n-t}} x^{sigma^{it}}, beta in GF(q^n)^*
/// deduplicated by GF(q^t)^* scaling; size (q^n-1)/(q^t-1), sigma-degree n-t.
SubspacePolyFamily gen_trace_family(const Field& F, uint32_t n, uint32_t t);

/// Trinomials x^{sigma^t} - b x^sigma - a x at n = t(t-1)+1 with t-1 a power
/// of the characteristic, N_{q^n/q}(a) = (-1)^{t-1} and
/// b = -a^{(sigma^n - sigma)/(sigma^t - 1)}; size (q^n-1)/(q-1).
SubspacePolyFamily gen_tri1(const Field& F, uint32_t n, uint32_t t);
/// Shifted adjoints of gen_tri1, normalized monic; same size and degree.
SubspacePolyFamily gen_tri1_hat(const Field& F, uint32_t n, uint32_t t);

/// Trinomials at n = t^2-1, t and q powers of 2, N_{q^n/q}(a) = 1 and
/// b = a^{-(sigma^{t^2} - sigma^t)/(sigma^t - 1)}; size (q^n-1)/(q-1).
SubspacePolyFamily gen_tri2(const Field& F, uint32_t n, uint32_t t);
SubspacePolyFamily gen_tri2_hat(const Field& F, uint32_t n, uint32_t t);

/// x + sum_{i<k} x^{sigma^{t p_i}} with p_i = 1 + q' + ... + q'^i, q' = p^r,
/// n = t p_k; a single polynomial of sigma-degree t p_{k-1}.  r = 0 recovers
/// the relative trace to GF(q^t).
SigmaPoly gen_huang(const Field& F, uint32_t n, uint32_t t, uint32_t k, uint32_t r);
/// Its shifted adjoint (monic, same kernel dimension).
SigmaPoly gen_huang_adjoint(const Field& F, uint32_t n, uint32_t t, uint32_t k, uint32_t r);

/// beta-scalings of gen_huang (resp. gen_huang_adjoint) deduplicated by
/// GF(q^t)^*; size (q^n-1)/(q^t-1), identical monomial support.
SubspacePolyFamily gen_q_family(const Field& F, uint32_t n, uint32_t t, uint32_t k, uint32_t r);
SubspacePolyFamily gen_q_prime_family(const Field& F, uint32_t n, uint32_t t, uint32_t k, uint32_t r);

/// f_alpha(x) = alpha^{sigma^k} f(alpha^{-1} x), k = deg f: kernel becomes
/// alpha * ker(f), monomial support unchanged.
SigmaPoly scale_transform(const SigmaPoly& f, const FieldElement& alpha);

struct PigeonholeResult {
    std::vector<SigmaPoly> members;   // the largest agreement group
    std::vector<uint64_t> key;        // element indices of the shared top coefficients
    uint64_t group_count = 0;         // number of distinct groups
    Big subspace_count = 0;           // [n r]_q
    Big bound = 0;                    // ceil([n r]_q / q^{m(g-1)})
};

/// Enumerates all r-dimensional subspaces of span(S) (|S| = n independent
/// points), builds their monic max-kernel polynomials and returns the largest
/// group agreeing on the g highest-index coefficients (positions r-g+1..r).
/// Ties break toward the smallest coefficient key in canonical element order.
PigeonholeResult pigeonhole_family(const Field& F, std::span<const FieldElement> S, uint32_t r,
                                   uint32_t g);

/// Dispatcher used by the CLI and recipe runner.  Pigeonhole specs yield the
/// winning group as the member list.
SubspacePolyFamily generate_family(const Field& F, const FamilySpec& spec);

}  // namespace rmlist
