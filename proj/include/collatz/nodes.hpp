#ifndef COLLATZ_NODES_HPP
#define COLLATZ_NODES_HPP

// The PP * PG node algorithm: successive products of the last lambda below
// 1 (PP) and the last lambda above 1 (PG) give the maxima of the condition C.
// Each product is reported with ln C, ln R, ln P and its base-d exponent.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collatz/combinatorics.hpp"
#include "collatz/mappings.hpp"
#include "collatz/numeric.hpp"

namespace collatz {

/// The two per-step factors of a two-factor map, the constant of the
/// least-term bound, and the base d used for P = d^k and R.
struct FactorSystem {
    Rational below;
    Rational above;
    Rational constant;
    int base = 3;
    /// Base of the r/s exponents (Delta = rs_base^-r); normally d.
    int rs_base = 3;

    static FactorSystem original_collatz();
    static FactorSystem three_x_plus_one();
    static FactorSystem carnielli(int d, const Rational& par);
    /// Factors of a two-factor mapping; `constant` overrides the preset one
    /// and is required when the mapping has none.
    static FactorSystem from_mapping(const MappingSpec& spec, const std::optional<Rational>& constant = std::nullopt);

    /// 0 < below < 1 < above, both with denominator d, constant > 0.
    void validate() const;
};

enum class Side { PP, PG };
std::string to_string(Side side);

struct Exponents {
    std::int64_t k1 = 0; // steps through the above factor
    std::int64_t k2 = 0; // steps through the below factor

    std::int64_t k() const { return k1 + k2; }
    friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Overflow-checked component sum.
Exponents operator+(const Exponents& a, const Exponents& b);

struct SideValue {
    Side side = Side::PP;
    Real delta;     // |lambda - 1|
    Real ln_lambda; // signed
    Exponents exponents;
};

struct NodeMetrics {
    Real ln_C;
    Real ln_R;
    Real ln_P;
    Real rs; // -ln(delta) / ln(rs_base)
};

struct NodeRecord {
    int main_index = 1;
    int secondary_index = 1;
    SideValue value;
    std::optional<NodeMetrics> metrics; // empty for the two seeds
    unsigned digits = kDefaultDigits;   // working precision when produced
};

struct PrecisionConfig {
    unsigned decimal_digits = kDefaultDigits;
    bool escalate = true;
    unsigned max_digits = kMaxDigits;
};

struct StopCriteria {
    int max_main_node = 14;
    std::int64_t max_k = 10'000'000;
};

struct NodeRunOptions {
    LogFactorialMode r_mode = LogFactorialMode::exact;
    bool with_metrics = true;
};

/// Runs the product algorithm from the seeds PP = below, PG = above. The
/// main index advances when the replaced side differs from the previous
/// product's, otherwise the secondary index does. Stops before the first
/// product whose main index exceeds `stop.max_main_node` or whose k exceeds
/// `stop.max_k`. Throws PrecisionCapError when the guard would need more
/// than `precision.max_digits`.
std::vector<NodeRecord> run_nodes(const FactorSystem& factors, const StopCriteria& stop,
                                  const PrecisionConfig& precision = {}, const NodeRunOptions& options = {});

/// k1 ln(above) + k2 ln(below) at `digits`.
Real ln_lambda(const Exponents& e, const FactorSystem& factors, unsigned digits = kDefaultDigits);

struct ConditionValue {
    Real C;
    Real ln_C;
};

/// C = constant * k1 / |ln lambda|, evaluated in log space.
ConditionValue condition_C(std::int64_t k1, const Real& ln_lambda_abs, const Rational& constant);

/// Partial sum of ln((1 - dPP)(1 + dPG)) = sum_j [(-1)^(j+1) dPG^j - dPP^j] / j.
Real delta_lambda_series(const Real& dPP, const Real& dPG, int order);

Real rs_exponent(const Real& delta, int base);

enum class TransitionCase { regular_PG, regular_PP, preswitch_PG, preswitch_PP };
std::string to_string(TransitionCase c);

struct TransitionClass {
    TransitionCase kind = TransitionCase::regular_PG;
    Side new_side = Side::PG;
    Real new_delta;
    Real r; // exponent of dPP
    Real s; // exponent of dPG
    Real t; // exponent of the new delta
    std::string predicted_relation() const;
    /// Whether r, s, t satisfy the predicted ordering.
    bool relation_holds() const;
};

/// Classifies the product of (1 - dPP)(1 + dPG). Regular when
/// |dPG - dPP| > min(dPP, dPG), so t lies strictly between r and s;
/// otherwise the first-order terms nearly cancel and t > max(r, s).
TransitionClass classify_transition(const Real& dPP, const Real& dPG, int base);

struct GapAnalysis {
    std::int64_t n_k1 = 0;
    std::int64_t n_k2 = 0;
    std::int64_t total = 0;
};

/// Solves C above^n_k1 ~ R and R below^n_k2 ~ C for the nearest integers.
GapAnalysis gap_analysis(const Real& ln_C, const Real& ln_R, const FactorSystem& factors);

/// Finds a record by (main, secondary); nullptr if absent.
const NodeRecord* find_node(const std::vector<NodeRecord>& records, int main_index, int secondary_index);

} // namespace collatz

#endif // COLLATZ_NODES_HPP
