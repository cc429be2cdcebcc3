#ifndef COLLATZ_VERIFY_HPP
#define COLLATZ_VERIFY_HPP

// Brute-force checks over windows of d^k consecutive starts: distinctness and
// periodicity of the residue sequences, class counts against eta, and
// enumeration of one (k1, k2) class.

#include <cstdint>
#include <optional>
#include <vector>

#include "collatz/mappings.hpp"
#include "collatz/numeric.hpp"

namespace collatz {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

struct WindowOptions {
    std::uint64_t limit = kDefaultEnumerationLimit; // max d^k
    unsigned threads = 1;
};

struct PeriodicityReport {
    int base = 0;
    std::size_t k = 0;
    std::int64_t window_start = 0;
    std::uint64_t distinct_count = 0;
    std::uint64_t expected = 0; // d^k
    std::uint64_t periodic_samples_checked = 0;
    bool all_distinct = false;
    bool all_periodic = false;
    /// First failing sample (n, q) when all_periodic is false.
    std::optional<std::pair<std::int64_t, std::int64_t>> counterexample;
};

/// Residue sequences of every n in [window_start, window_start + d^k) are
/// compared exactly; then `samples` random (n, q), q in [-1000, 1000] \ {0},
/// are checked for w(n) = w(n + d^k q). `seed` fixes the draw.
PeriodicityReport verify_periodicity(const MappingSpec& spec, std::size_t k, std::int64_t window_start,
                                     std::uint64_t samples, std::uint64_t seed = 1, const WindowOptions& opt = {});

struct ClassCount {
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
    std::uint64_t observed = 0;
    BigInt expected;
};

struct DistributionReport {
    int base = 0;
    std::size_t k = 0;
    std::int64_t window_start = 0;
    std::vector<ClassCount> classes; // k2 = 0..k
    std::uint64_t total = 0;         // always d^k
    bool match = false;
};

DistributionReport verify_distribution(const MappingSpec& spec, std::size_t k, std::int64_t window_start,
                                       const WindowOptions& opt = {});

struct ClassMember {
    Trajectory trajectory;
    SymbolSequence symbols;
};

/// Window members whose first k steps take k1 expanding and k2 contracting
/// branches, in increasing start order. Empty when k1 + k2 != k.
std::vector<ClassMember> enumerate_class(const MappingSpec& spec, std::size_t k, std::int64_t k1, std::int64_t k2,
                                         std::int64_t window_start, const WindowOptions& opt = {});

/// Window members whose residue sequence equals `symbols`.
std::vector<std::int64_t> starts_with_sequence(const MappingSpec& spec, const SymbolSequence& symbols,
                                               std::int64_t window_start, const WindowOptions& opt = {});

/// First `head` and last `tail` rows; everything when they overlap.
std::vector<ClassMember> head_tail(const std::vector<ClassMember>& rows, std::size_t head, std::size_t tail);

struct MergePoint {
    std::uint64_t steps_a = 0;
    std::uint64_t steps_b = 0;
    BigInt value;
};

/// Earliest value shared by the trajectories of a and b within `max_steps`
/// steps each, if any.
std::optional<MergePoint> merge_point(const MappingSpec& spec, const BigInt& a, const BigInt& b,
                                      std::uint64_t max_steps);

} // namespace collatz

#endif // COLLATZ_VERIFY_HPP
