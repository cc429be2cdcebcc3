#include "collatz/verify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "collatz/combinatorics.hpp"

namespace collatz {

namespace {

std::uint64_t window_size(const MappingSpec& spec, std::size_t k, std::uint64_t limit)
{
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(spec.modulus()), &size) || size > limit) {
            throw ConfigError("window of " + std::to_string(spec.modulus()) + "^" + std::to_string(k) +
                              " starts exceeds the enumeration limit " + std::to_string(limit));
        }
    }
    return size;
}

// Residue sequence packed as a base-d number (first symbol most significant).
// Distinct sequences of one length get distinct keys.
std::uint64_t sequence_key(const MappingSpec& spec, std::int64_t n, std::size_t k)
{
    const auto d = static_cast<std::uint64_t>(spec.modulus());
    std::uint64_t key = 0;
    std::int64_t x = n;
    for (std::size_t i = 0; i < k; ++i) {
        const int r = residue(x, spec.modulus());
        key = key * d + static_cast<std::uint64_t>(r);
        if (i + 1 == k) {
            break;
        }
        auto next = apply_checked(spec, x);
        if (!next) {
            // Rare: finish in big integers.
            BigInt big = apply(spec, BigInt(x));
            for (std::size_t j = i + 1; j < k; ++j) {
                key = key * d + static_cast<std::uint64_t>(residue(big, spec.modulus()));
                big = apply(spec, big);
            }
            return key;
        }
        x = *next;
    }
    return key;
}

std::vector<std::uint64_t> window_keys(const MappingSpec& spec, std::size_t k, std::int64_t window_start,
                                       std::uint64_t size, unsigned threads)
{
    std::vector<std::uint64_t> keys(size);
    auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            keys[i] = sequence_key(spec, window_start + static_cast<std::int64_t>(i), k);
        }
    };
    const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, size));
    if (workers == 1) {
        fill(0, size);
        return keys;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = size / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = w + 1 == workers ? size : lo + chunk;
        pool.emplace_back(fill, lo, hi);
    }
    for (auto& t : pool) {
        t.join();
    }
    return keys;
}

// Number of contracting symbols in a packed key.
std::int64_t below_count(const MappingSpec& spec, std::uint64_t key, std::size_t k)
{
    const auto d = static_cast<std::uint64_t>(spec.modulus());
    std::int64_t count = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (spec.kind(static_cast<int>(key % d)) == BranchKind::below) {
            ++count;
        }
        key /= d;
    }
    return count;
}

void check_window_start(std::int64_t window_start, std::uint64_t size)
{
    if (window_start > std::numeric_limits<std::int64_t>::max() - static_cast<std::int64_t>(size)) {
        throw ConfigError("window start too large");
    }
}

} // namespace

PeriodicityReport verify_periodicity(const MappingSpec& spec, std::size_t k, std::int64_t window_start,
                                     std::uint64_t samples, std::uint64_t seed, const WindowOptions& opt)
{
    const std::uint64_t size = window_size(spec, k, opt.limit);
    check_window_start(window_start, size);
    const auto keys = window_keys(spec, k, window_start, size, opt.threads);

    PeriodicityReport rep;
    rep.base = spec.modulus();
    rep.k = k;
    rep.window_start = window_start;
    rep.expected = size;
    std::vector<bool> seen(size, false);
    for (auto key : keys) {
        if (!seen[key]) {
            seen[key] = true;
            ++rep.distinct_count;
        }
    }
    rep.all_distinct = rep.distinct_count == rep.expected;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    std::uniform_int_distribution<std::int64_t> pick_q(-1000, 999);
    rep.all_periodic = true;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::uint64_t i = pick(rng);
        std::int64_t q = pick_q(rng);
        if (q >= 0) {
            ++q; // skip 0
        }
        const std::int64_t n = window_start + static_cast<std::int64_t>(i);
        std::int64_t shifted = 0;
        bool same = false;
        if (__builtin_mul_overflow(static_cast<std::int64_t>(size), q, &shifted) ||
            __builtin_add_overflow(shifted, n, &shifted)) {
            const BigInt big = BigInt(n) + BigInt(size) * q;
            same = symbol_sequence(spec, big, k) == symbol_sequence(spec, BigInt(n), k);
        } else {
            same = sequence_key(spec, shifted, k) == keys[i];
        }
        ++rep.periodic_samples_checked;
        if (!same && rep.all_periodic) {
            rep.all_periodic = false;
            rep.counterexample = std::make_pair(n, q);
        }
    }
    return rep;
}

DistributionReport verify_distribution(const MappingSpec& spec, std::size_t k, std::int64_t window_start,
                                       const WindowOptions& opt)
{
    spec.require_two_factor();
    const std::uint64_t size = window_size(spec, k, opt.limit);
    check_window_start(window_start, size);
    const auto keys = window_keys(spec, k, window_start, size, opt.threads);

    DistributionReport rep;
    rep.base = spec.modulus();
    rep.k = k;
    rep.window_start = window_start;
    const auto kk = static_cast<std::int64_t>(k);
    for (std::int64_t k2 = 0; k2 <= kk; ++k2) {
        rep.classes.push_back(
            {kk - k2, k2, 0, class_count(spec.above_branch_count(), spec.below_branch_count(), kk - k2, k2)});
    }
    for (auto key : keys) {
        ++rep.classes[static_cast<std::size_t>(below_count(spec, key, k))].observed;
        ++rep.total;
    }
    rep.match = true;
    for (const auto& c : rep.classes) {
        rep.match = rep.match && BigInt(c.observed) == c.expected;
    }
    return rep;
}

std::vector<ClassMember> enumerate_class(const MappingSpec& spec, std::size_t k, std::int64_t k1, std::int64_t k2,
                                         std::int64_t window_start, const WindowOptions& opt)
{
    const std::uint64_t size = window_size(spec, k, opt.limit);
    check_window_start(window_start, size);
    std::vector<ClassMember> out;
    if (k1 < 0 || k2 < 0 || k1 + k2 != static_cast<std::int64_t>(k)) {
        return out;
    }
    const auto keys = window_keys(spec, k, window_start, size, opt.threads);
    for (std::uint64_t i = 0; i < size; ++i) {
        if (below_count(spec, keys[i], k) == k2) {
            auto t = iterate(spec, BigInt(window_start + static_cast<std::int64_t>(i)), k);
            auto symbols = t.symbols;
            out.push_back({std::move(t), std::move(symbols)});
        }
    }
    return out;
}

std::vector<std::int64_t> starts_with_sequence(const MappingSpec& spec, const SymbolSequence& symbols,
                                               std::int64_t window_start, const WindowOptions& opt)
{
    if (symbols.modulus() != spec.modulus()) {
        throw ConfigError("symbol sequence modulus does not match the mapping");
    }
    const std::size_t k = symbols.size();
    const std::uint64_t size = window_size(spec, k, opt.limit);
    check_window_start(window_start, size);
    std::uint64_t target = 0;
    for (int r : symbols.residues()) {
        target = target * static_cast<std::uint64_t>(spec.modulus()) + static_cast<std::uint64_t>(r);
    }
    const auto keys = window_keys(spec, k, window_start, size, opt.threads);
    std::vector<std::int64_t> out;
    for (std::uint64_t i = 0; i < size; ++i) {
        if (keys[i] == target) {
            out.push_back(window_start + static_cast<std::int64_t>(i));
        }
    }
    return out;
}

std::vector<ClassMember> head_tail(const std::vector<ClassMember>& rows, std::size_t head, std::size_t tail)
{
    if (head + tail >= rows.size()) {
        return rows;
    }
    std::vector<ClassMember> out(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(head));
    out.insert(out.end(), rows.end() - static_cast<std::ptrdiff_t>(tail), rows.end());
    return out;
}

std::optional<MergePoint> merge_point(const MappingSpec& spec, const BigInt& a, const BigInt& b,
                                      std::uint64_t max_steps)
{
    std::map<BigInt, std::uint64_t> first_seen;
    BigInt x = a;
    for (std::uint64_t i = 0; i <= max_steps; ++i) {
        first_seen.try_emplace(x, i);
        if (i < max_steps) {
            x = apply(spec, x);
        }
    }
    x = b;
    for (std::uint64_t j = 0; j <= max_steps; ++j) {
        auto it = first_seen.find(x);
        if (it != first_seen.end()) {
            return MergePoint{it->second, j, x};
        }
        if (j < max_steps) {
            x = apply(spec, x);
        }
    }
    return std::nullopt;
}

} // namespace collatz
