#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmlist/codes.hpp"
#include "rmlist/families.hpp"

namespace rmlist {

struct JohnsonRadius {
    double value = 0.0;       // (m+n)/2 - sqrt((m+n)^2/4 - m(n-h+1-eps))
    uint32_t first_integer = 0;  // smallest integer radius covered
};

/// Radius threshold beyond which a code containing the shifted window of
/// width h cannot be list decoded efficiently.  Throws NegativeRadicand when
/// (m+n)^2/4 < m(n-h+1-eps).
JohnsonRadius johnson_like_radius(uint32_t m, uint32_t n, uint32_t h, double eps);

enum class WitnessMode { GeneralBasis, SubfieldBasis, SubfieldBasisHat };
const char* witness_mode_name(WitnessMode m);
std::optional<WitnessMode> witness_mode_from_name(const std::string& s);

struct WitnessChecks {
    bool w_not_in_code = false;
    bool listed_in_code = false;
    bool distances_exact = false;
    bool distinct = false;
    bool size_ge_bound = false;
    bool exhaustive_done = false;
    Big exhaustive_count = 0;
};

struct WitnessReport {
    WitnessMode mode = WitnessMode::GeneralBasis;
    uint32_t radius = 0;
    uint32_t h = 0, j = 0, l = 0, tau = 0;
    std::optional<FamilySpec> family_spec;
    std::vector<FieldElement> w;
    std::vector<std::vector<FieldElement>> list;
    Big bound = 0;
    bool verified = false;
    WitnessChecks checks;
    // construction trace
    std::vector<FieldElement> chosen_r;  // coefficients of R, low-to-high
    uint64_t family_size = 0;
    std::vector<uint64_t> pigeonhole_key;  // general mode
    uint64_t pigeonhole_groups = 0;
};

struct WitnessOptions {
    bool exhaustive = true;
    Big budget = Big(1) << 24;
};

/// Word at rank distance tau from >= bound codewords, built from the largest
/// agreement group of max-kernel polynomials with kernels inside the span of
/// the evaluation points, shifted into the code's free window [j, j+h-1].
WitnessReport build_witness_general(const EvalCode& code, uint32_t tau, uint32_t h, uint32_t j,
                                    const WitnessOptions& opts = {});

/// Subfield-basis construction: the supplied family (inside the affine set
/// with free support [0, h-1] and monic leader at l) is beta-scaled onto the
/// point basis of beta GF(q^n) and shifted by sigma^j; the ball radius is
/// n - l and the bound is the family size.
WitnessReport build_witness_subfield(const EvalCode& code, uint32_t l, uint32_t h, uint32_t j,
                                     const SubspacePolyFamily& family,
                                     const WitnessOptions& opts = {});

/// Variant for families with unit constant term and free support in
/// [l-h+1, l]; the shifted window is [l-h+1+j, l+j].
WitnessReport build_witness_subfield_hat(const EvalCode& code, uint32_t l, uint32_t h, uint32_t j,
                                         const SubspacePolyFamily& family,
                                         const WitnessOptions& opts = {});

/// Re-checks a report against the code: w outside, list inside, distances
/// within the radius, pairwise distinct, |list| >= bound; optionally the
/// exhaustive ball count.
bool verify_witness(const EvalCode& code, WitnessReport& report, bool exhaustive,
                    const Big& budget);

struct WitnessRecipe {
    WitnessMode mode = WitnessMode::SubfieldBasis;
    uint32_t tau = 0, l = 0, h = 0, j = 0;
    std::optional<FamilySpec> family;
};

struct Claim {
    std::string theorem_id;
    bool applicable = false;
    std::string failed_hypothesis;
    uint32_t radius_threshold = 0;
    bool at_all = false;  // threshold == unique decoding radius + 1
    std::optional<WitnessRecipe> recipe;
    std::string note;
};

/// Evaluates the arithmetic hypotheses of the radius theorems against this
/// code and returns one claim per theorem; applicable claims carry a runnable
/// recipe.  Needs the exact minimum distance (within budget).
std::vector<Claim> analyze_decodability(const EvalCode& code, const Big& budget);

WitnessReport run_recipe(const EvalCode& code, const WitnessRecipe& recipe,
                         const WitnessOptions& opts = {});

}  // namespace rmlist
