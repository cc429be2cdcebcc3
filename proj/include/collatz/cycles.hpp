#ifndef COLLATZ_CYCLES_HPP
#define COLLATZ_CYCLES_HPP

// Bounded cycle search, canonical cycle records and the least-term
// certificate |m| <= C = constant * k1 / |ln lambda|.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "collatz/mappings.hpp"
#include "collatz/nodes.hpp"
#include "collatz/numeric.hpp"

namespace collatz {

struct SearchBudget {
    std::uint64_t max_steps = 10'000;
    BigInt max_magnitude = BigInt(1'000'000'000'000'000'000LL);
};

/// Inclusive interval of start values.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// Parses "a..b" (either bound may be negative).
IntRange parse_range(const std::string& text);

struct ConditionCertificate {
    BigInt m;        // member of least absolute value
    Real C;
    Real ln_C;       // -inf when vacuous
    Rational constant;
    bool holds = false;
    bool vacuous = false; // k1 = 0: the bound says nothing beyond m = 0
};

struct CycleRecord {
    std::vector<BigInt> members; // rotated to start at the signed minimum
    Exponents branch_counts;     // (k1, k2)
    Side lambda_side = Side::PP;
    std::optional<ConditionCertificate> certificate;

    std::size_t length() const { return members.size(); }
    const BigInt& least() const { return members.front(); }
};

enum class StopReason { step_budget, magnitude_budget };

struct UndeterminedStart {
    std::int64_t start = 0;
    StopReason reason = StopReason::step_budget;
};

struct CycleSearchResult {
    std::vector<CycleRecord> cycles; // sorted by least term, then length
    std::vector<UndeterminedStart> undetermined;
    std::uint64_t starts_examined = 0;
};

/// Every cycle whose least term lies in `range` and whose members stay
/// within the budget is returned once. Starts that run out of budget are
/// listed as undetermined. Work is split over `threads` workers.
CycleSearchResult find_cycles(const MappingSpec& spec, const IntRange& range, const SearchBudget& budget = {},
                              unsigned threads = 1);

/// Validates that `members` is a cycle of `spec` without repeats and
/// rotates it to start at its minimum.
CycleRecord canonicalize(const MappingSpec& spec, std::span<const BigInt> members);

ConditionCertificate certify(const MappingSpec& spec, const CycleRecord& cycle, const Rational& constant,
                             unsigned digits = kDefaultDigits);

} // namespace collatz

#endif // COLLATZ_CYCLES_HPP
