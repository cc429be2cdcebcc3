#include "collatz/nodes.hpp"

#include <algorithm>
#include <stdexcept>

namespace collatz {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::log10;

FactorSystem FactorSystem::original_collatz()
{
    return {Rational(2, 3), Rational(4, 3), Rational(7, 24), 3, 3};
}

FactorSystem FactorSystem::three_x_plus_one()
{
    return {Rational(1, 2), Rational(3, 2), Rational(5, 12), 2, 2};
}

FactorSystem FactorSystem::carnielli(int d, const Rational& par)
{
    FactorSystem f{Rational(1, d), Rational(d + 1, d), par, d, d};
    f.validate();
    return f;
}

FactorSystem FactorSystem::from_mapping(const MappingSpec& spec, const std::optional<Rational>& constant)
{
    spec.require_two_factor();
    auto c = constant ? constant : spec.default_constant();
    if (!c) {
        throw ConfigError("mapping '" + spec.name() +
                          "' has no known constant for the least-term bound; supply one (--par)");
    }
    FactorSystem f{spec.below_factor(), spec.above_factor(), *c, spec.modulus(), spec.modulus()};
    f.validate();
    return f;
}

void FactorSystem::validate() const
{
    if (base < 2 || rs_base < 2) {
        throw ConfigError("factor system: base must be >= 2");
    }
    if (!(below > 0 && below < 1 && above > 1)) {
        throw ConfigError("factor system: need 0 < below < 1 < above");
    }
    if (base % denominator(below) != 0 || base % denominator(above) != 0) {
        throw ConfigError("factor system: factor denominators must divide d");
    }
    if (constant <= 0) {
        throw ConfigError("factor system: the bound constant must be positive");
    }
}

std::string to_string(Side side)
{
    return side == Side::PP ? "PP" : "PG";
}

Exponents operator+(const Exponents& a, const Exponents& b)
{
    Exponents out;
    if (__builtin_add_overflow(a.k1, b.k1, &out.k1) || __builtin_add_overflow(a.k2, b.k2, &out.k2)) {
        throw std::overflow_error("node exponents exceed 64-bit range");
    }
    return out;
}

namespace {

struct LogFactors {
    Real above;
    Real below;
};

LogFactors log_factors(const FactorSystem& f)
{
    return {ln(f.above), ln(f.below)};
}

Real combine(const Exponents& e, const LogFactors& lf)
{
    return Real(e.k1) * lf.above + Real(e.k2) * lf.below;
}

// The sign of ln lambda decides the side, and ln lambda is a difference of
// two terms of size ~k. Asks for more digits when fewer than 20 significant
// digits survive the cancellation, or when |ln lambda| is within 10 orders of
// the precision floor.
bool needs_more_digits(const Real& value, const Exponents& e, const LogFactors& lf, unsigned digits)
{
    if (value == 0) {
        return true;
    }
    const Real magnitude = abs(Real(e.k1) * lf.above) + abs(Real(e.k2) * lf.below);
    const Real lost = log10(magnitude / abs(value));
    const Real floor_exp = -log10(abs(value));
    return floor_exp > Real(digits) - 10 || lost > Real(digits) - 20;
}

NodeMetrics metrics_for(const SideValue& v, const FactorSystem& f, const NodeRunOptions& opt, unsigned digits)
{
    NodeMetrics m;
    m.ln_C = condition_C(v.exponents.k1, abs(v.ln_lambda), f.constant).ln_C;
    m.ln_R = repartition(f.base, v.exponents.k1, v.exponents.k2, opt.r_mode, digits).ln_R;
    m.ln_P = Real(v.exponents.k()) * log(Real(f.base));
    m.rs = rs_exponent(v.delta, f.rs_base);
    return m;
}

} // namespace

std::vector<NodeRecord> run_nodes(const FactorSystem& factors, const StopCriteria& stop,
                                  const PrecisionConfig& precision, const NodeRunOptions& options)
{
    factors.validate();
    if (precision.decimal_digits < kMinDigits) {
        throw ConfigError("precision must be at least " + std::to_string(kMinDigits) + " digits");
    }
    unsigned digits = precision.decimal_digits;
    std::optional<ScopedPrecision> scope;
    scope.emplace(digits);
    LogFactors lf = log_factors(factors);

    std::vector<NodeRecord> out;
    Exponents pp{0, 1};
    Exponents pg{1, 0};
    if (stop.max_main_node >= 1) {
        NodeRecord seed_pp;
        seed_pp.value = {Side::PP, to_real(1 - factors.below), lf.below, pp};
        seed_pp.digits = digits;
        NodeRecord seed_pg;
        seed_pg.value = {Side::PG, to_real(factors.above - 1), lf.above, pg};
        seed_pg.digits = digits;
        out.push_back(std::move(seed_pp));
        out.push_back(std::move(seed_pg));
    }

    std::optional<Side> last_side;
    int main_index = 1;
    int secondary_index = 1;
    while (true) {
        const Exponents e = pp + pg;
        if (e.k() > stop.max_k) {
            break;
        }
        Real value = combine(e, lf);
        while (needs_more_digits(value, e, lf, digits)) {
            if (!precision.escalate) {
                throw PrecisionCapError("precision guard failed at k = " + std::to_string(e.k()) + " with " +
                                        std::to_string(digits) + " digits and escalation disabled");
            }
            if (digits * 2 > precision.max_digits) {
                throw PrecisionCapError("precision guard needs more than " + std::to_string(precision.max_digits) +
                                        " digits at k = " + std::to_string(e.k()));
            }
            digits *= 2;
            scope.reset();
            scope.emplace(digits);
            lf = log_factors(factors);
            value = combine(e, lf);
        }

        const Side side = value < 0 ? Side::PP : Side::PG;
        if (last_side && *last_side == side) {
            ++secondary_index;
        } else {
            ++main_index;
            secondary_index = 1;
        }
        last_side = side;
        if (main_index > stop.max_main_node) {
            break;
        }
        (side == Side::PP ? pp : pg) = e;

        NodeRecord rec;
        rec.main_index = main_index;
        rec.secondary_index = secondary_index;
        rec.value = {side, abs(expm1(value)), value, e};
        rec.digits = digits;
        if (options.with_metrics) {
            rec.metrics = metrics_for(rec.value, factors, options, digits);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

Real ln_lambda(const Exponents& e, const FactorSystem& factors, unsigned digits)
{
    if (e.k1 < 0 || e.k2 < 0 || e.k() == 0) {
        throw std::invalid_argument("ln_lambda: exponents must be non-negative and not both zero");
    }
    ScopedPrecision prec(digits);
    return combine(e, log_factors(factors));
}

ConditionValue condition_C(std::int64_t k1, const Real& ln_lambda_abs, const Rational& constant)
{
    if (k1 < 1) {
        throw std::invalid_argument("condition_C: k1 must be >= 1");
    }
    if (ln_lambda_abs <= 0) {
        throw std::invalid_argument("condition_C: |ln lambda| must be positive");
    }
    ConditionValue out;
    out.ln_C = ln(constant) + log(Real(k1)) - log(ln_lambda_abs);
    out.C = exp(out.ln_C);
    return out;
}

Real delta_lambda_series(const Real& dPP, const Real& dPG, int order)
{
    Real sum = 0;
    Real pp_pow = 1;
    Real pg_pow = 1;
    for (int j = 1; j <= order; ++j) {
        pp_pow *= dPP;
        pg_pow *= dPG;
        const Real pg_term = (j % 2 == 1) ? pg_pow : Real(-pg_pow);
        sum += (pg_term - pp_pow) / j;
    }
    return sum;
}

Real rs_exponent(const Real& delta, int base)
{
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("rs_exponent: delta must lie in (0, 1)");
    }
    return -log(delta) / log(Real(base));
}

std::string to_string(TransitionCase c)
{
    switch (c) {
    case TransitionCase::regular_PG:
        return "regular-PG";
    case TransitionCase::regular_PP:
        return "regular-PP";
    case TransitionCase::preswitch_PG:
        return "preswitch-PG";
    case TransitionCase::preswitch_PP:
        return "preswitch-PP";
    }
    return "";
}

std::string TransitionClass::predicted_relation() const
{
    switch (kind) {
    case TransitionCase::regular_PG:
        return "s < t < r";
    case TransitionCase::regular_PP:
        return "r < t < s";
    default:
        return r > s ? "t > r > s" : "t > s > r";
    }
}

bool TransitionClass::relation_holds() const
{
    switch (kind) {
    case TransitionCase::regular_PG:
        return s < t && t < r;
    case TransitionCase::regular_PP:
        return r < t && t < s;
    default:
        return t > r && t > s;
    }
}

TransitionClass classify_transition(const Real& dPP, const Real& dPG, int base)
{
    if (!(dPP > 0 && dPP < 1 && dPG > 0 && dPG < 1)) {
        throw std::invalid_argument("classify_transition: deltas must lie in (0, 1)");
    }
    if (dPP == dPG) {
        throw std::invalid_argument("classify_transition: dPP == dPG (only the seeds coincide)");
    }
    // (1 + dPG)(1 - dPP) - 1
    const Real product_delta = dPG - dPP - dPP * dPG;
    if (product_delta == 0) {
        throw std::invalid_argument("classify_transition: product equals 1");
    }
    TransitionClass out;
    out.new_side = product_delta > 0 ? Side::PG : Side::PP;
    out.new_delta = abs(product_delta);
    out.r = rs_exponent(dPP, base);
    out.s = rs_exponent(dPG, base);
    out.t = rs_exponent(out.new_delta, base);

    const Real gap = abs(dPG - dPP);
    const bool regular = gap > (dPP < dPG ? dPP : dPG);
    if (regular) {
        out.kind = dPG > dPP ? TransitionCase::regular_PG : TransitionCase::regular_PP;
    } else {
        out.kind = out.new_side == Side::PG ? TransitionCase::preswitch_PG : TransitionCase::preswitch_PP;
    }
    return out;
}

GapAnalysis gap_analysis(const Real& ln_C, const Real& ln_R, const FactorSystem& factors)
{
    if (!(ln_R > ln_C)) {
        throw ConfigError("gap analysis needs ln R > ln C");
    }
    const Real gap = ln_R - ln_C;
    auto nearest = [](const Real& x) { return boost::multiprecision::floor(x + Real(0.5)).convert_to<std::int64_t>(); };
    GapAnalysis out;
    out.n_k1 = nearest(gap / ln(factors.above));
    out.n_k2 = nearest(gap / abs(ln(factors.below)));
    out.total = out.n_k1 + out.n_k2;
    return out;
}

const NodeRecord* find_node(const std::vector<NodeRecord>& records, int main_index, int secondary_index)
{
    auto it = std::find_if(records.begin(), records.end(), [&](const NodeRecord& r) {
        return r.main_index == main_index && r.secondary_index == secondary_index;
    });
    return it == records.end() ? nullptr : &*it;
}

} // namespace collatz
