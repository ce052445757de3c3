#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rmlist/bigmath.hpp"
#include "rmlist/pmatrix.hpp"
#include "rmlist/sigma_poly.hpp"

namespace rmlist {

/// Additive (GF(p)-linear) self-map of GF(q^m) used for the outer coefficient
/// couplings of the twisted code family.
struct AdditiveMapSpec {
    enum class Kind { Zero, Identity, EtaQPow, EtaPPow, TraceHalf, Matrix };
    Kind kind = Kind::Zero;
    FieldElement eta;  // EtaQPow: a -> eta a^{q^h}; EtaPPow: a -> eta a^{p^h}
    uint32_t h = 0;
    std::vector<uint32_t> matrix_cols;  // Matrix: e x e over GF(p), column-major

    FieldElement apply(const Field& F, const FieldElement& a) const;
    uint32_t image_rank_p(const Field& F) const;  // log_p |Im|
    bool is_zero_map() const { return kind == Kind::Zero; }
    bool is_bijective(const Field& F) const;
};

struct CodeDescriptor {
    enum class Kind { Gabidulin, PowerGabidulin, Hf1f2, TwistedSheekey, Cj };
    Kind kind = Kind::Gabidulin;
    uint32_t k = 0;  // Gabidulin / Hf1f2 / TwistedSheekey / Cj
    uint32_t h = 0;  // PowerGabidulin width; TwistedSheekey twist power
    uint32_t j = 0;  // PowerGabidulin shift; Cj omitted index
    AdditiveMapSpec f1, f2;  // Hf1f2
    FieldElement eta;        // TwistedSheekey

    static CodeDescriptor gabidulin(uint32_t k);
    static CodeDescriptor power_gabidulin(uint32_t h, uint32_t j);
    static CodeDescriptor hf1f2(uint32_t k, AdditiveMapSpec f1, AdditiveMapSpec f2);
    static CodeDescriptor twisted_sheekey(uint32_t k, FieldElement eta, uint32_t h);
    static CodeDescriptor cj(uint32_t k, uint32_t j_omitted);
};

struct PointSpec {
    enum class Kind { Explicit, SubfieldBasis };
    Kind kind = Kind::Explicit;
    std::vector<FieldElement> points;  // Explicit
    uint32_t n = 0;                    // SubfieldBasis level
    FieldElement beta;                 // SubfieldBasis scaling (nonzero)
};

struct SingletonResult {
    bool is_mrd = false;
    double defect_log_q = 0.0;  // log_q(bound) - log_q(|C|)
    bool degenerate = false;    // |C| <= 1, no distance defined
};

/// Evaluation code: the descriptor's sigma-polynomial space evaluated at n
/// GF(q)-independent points of GF(q^m).  The parameter-to-codeword map is
/// checked injective at build time, so enumeration order is the canonical
/// parameter order and |code| = p^{dim_p}.
class EvalCode {
   public:
    static EvalCode build(const Field& F, CodeDescriptor desc, PointSpec pts);

    const Field& field() const { return *f_; }
    const CodeDescriptor& descriptor() const { return desc_; }
    const PointSpec& point_spec() const { return meta_; }
    const std::vector<FieldElement>& points() const { return points_; }
    uint32_t n() const { return static_cast<uint32_t>(points_.size()); }

    uint32_t param_count() const { return param_count_; }
    uint32_t dim_p() const { return gen_.rows; }
    Big size() const;

    SigmaPoly poly_at(const Big& index) const;
    std::vector<FieldElement> eval_poly(const SigmaPoly& f) const;
    std::vector<FieldElement> codeword_at(const Big& index) const;

    /// Streams every codeword once (Gray order over the GF(p)-parameter
    /// space; the zero word comes first).  The pointer refers to the word's
    /// n*e flat coordinates and is only valid during the call.
    void for_each_codeword(const std::function<void(const uint32_t*)>& fn) const;

    bool contains(std::span<const FieldElement> word) const;
    bool contains_flat(const uint32_t* flat) const;

    /// Structural check: the polynomial space contains every polynomial
    /// supported inside [lo, hi].
    bool contains_window(uint32_t lo, uint32_t hi) const;
    std::vector<std::pair<uint32_t, uint32_t>> free_windows() const;

    /// Exact minimum rank distance by weight enumeration (the space is
    /// GF(p)-additive); cached.  Throws BudgetExceeded when |C| > budget and
    /// ParamViolation when |C| <= 1.
    uint32_t min_distance(const Big& budget) const;
    std::optional<uint32_t> cached_min_distance() const { return d_; }

    SingletonResult singleton_check(const Big& budget) const;

    /// Twisted-family extremality condition on the outer coefficients,
    /// evaluated when affordable and recorded (not required).
    bool mrd_condition_checked() const { return mrd_checked_; }
    bool mrd_condition_holds() const { return mrd_holds_; }

    std::vector<FieldElement> unflatten(const uint32_t* flat) const;
    void flatten(std::span<const FieldElement> word, uint32_t* flat) const;

   private:
    EvalCode() = default;
    SigmaPoly poly_from_params(std::span<const FieldElement> params) const;

    const Field* f_ = nullptr;
    CodeDescriptor desc_;
    PointSpec meta_;
    std::vector<FieldElement> points_;
    std::vector<uint32_t> positions_;  // free sigma-positions (window kinds)
    uint32_t param_count_ = 0;
    PMat gen_;   // dim_p x (n*e) generator rows, in parameter order
    PMat rref_;  // RREF of gen_ for membership
    std::vector<uint32_t> pivots_;
    bool mrd_checked_ = false, mrd_holds_ = false;
    mutable std::optional<uint32_t> d_;
};

/// GF(q)-rank of the coordinate matrix of the entries.
uint32_t rank_weight(const Field& F, std::span<const FieldElement> v);
uint32_t rank_weight_flat(const Field& F, const uint32_t* flat, uint32_t n);
uint32_t rank_distance(const Field& F, std::span<const FieldElement> u,
                       std::span<const FieldElement> v);

/// |{c in code : rank_distance(center, c) <= radius}| by exhaustive scan.
Big count_in_ball(const EvalCode& code, std::span<const FieldElement> center, uint32_t radius,
                  const Big& budget);

/// Smallest extension degree m for which the omitted-monomial code family is
/// provably non-extremal at the given parameters (q > 5, k >= 3).
uint64_t cj_mbound(uint64_t q, uint32_t s, uint32_t k);

}  // namespace rmlist
