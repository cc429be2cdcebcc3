#include "collatz/cycles.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <unordered_map>
#include <variant>

namespace collatz {

IntRange parse_range(const std::string& text)
{
    auto sep = text.find("..", 1);
    if (sep == std::string::npos) {
        throw ConfigError("range '" + text + "': expected LO..HI");
    }
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const auto lo_text = text.substr(0, sep);
        const auto hi_text = text.substr(sep + 2);
        IntRange r{std::stoll(lo_text, &used_lo), std::stoll(hi_text, &used_hi)};
        if (used_lo != lo_text.size() || used_hi != hi_text.size()) {
            throw ConfigError("");
        }
        if (r.lo > r.hi) {
            throw ConfigError("range '" + text + "' is empty");
        }
        return r;
    } catch (const ConfigError& e) {
        if (std::string(e.what()).empty()) {
            throw ConfigError("range '" + text + "': bounds must be integers");
        }
        throw;
    } catch (const std::exception&) {
        throw ConfigError("range '" + text + "': bounds must be integers");
    }
}

namespace {

template <class Int>
using SeenMap = std::conditional_t<std::is_same_v<Int, std::int64_t>, std::unordered_map<std::int64_t, std::size_t>,
                                   std::map<BigInt, std::size_t>>;

std::optional<std::int64_t> step(const MappingSpec& spec, std::int64_t x)
{
    return apply_checked(spec, x);
}

std::optional<BigInt> step(const MappingSpec& spec, const BigInt& x)
{
    return apply(spec, x);
}

template <class Int>
Int magnitude(const Int& x)
{
    return x < 0 ? Int(-x) : x;
}

// Follows one start until a value repeats or the budget runs out. Returns the
// repeating tail of the trajectory.
template <class Int>
std::variant<std::vector<Int>, StopReason> trace(const MappingSpec& spec, Int start, std::uint64_t max_steps,
                                                 const Int& max_magnitude)
{
    if (magnitude(start) > max_magnitude) {
        return StopReason::magnitude_budget;
    }
    SeenMap<Int> seen;
    std::vector<Int> path{start};
    seen.emplace(start, 0);
    Int x = start;
    for (std::uint64_t i = 0; i < max_steps; ++i) {
        auto next = step(spec, x);
        if (!next || magnitude(*next) > max_magnitude) {
            return StopReason::magnitude_budget;
        }
        x = *next;
        auto it = seen.find(x);
        if (it != seen.end()) {
            if (spec.bijective() && it->second != 0) {
                throw std::logic_error("mapping '" + spec.name() +
                                       "' is declared bijective but a trajectory re-entered a cycle it did not start on");
            }
            return std::vector<Int>(path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end());
        }
        seen.emplace(x, path.size());
        path.push_back(x);
    }
    return StopReason::step_budget;
}

struct WorkerResult {
    std::vector<std::vector<BigInt>> cycles;
    std::vector<UndeterminedStart> undetermined;
};

template <class Int>
WorkerResult search_chunk(const MappingSpec& spec, std::int64_t lo, std::int64_t hi, const SearchBudget& budget,
                          const Int& max_magnitude)
{
    WorkerResult out;
    for (std::int64_t s = lo;; ++s) {
        auto result = trace<Int>(spec, Int(s), budget.max_steps, max_magnitude);
        if (auto* cycle = std::get_if<std::vector<Int>>(&result)) {
            std::vector<BigInt> members;
            members.reserve(cycle->size());
            for (const auto& v : *cycle) {
                members.emplace_back(v);
            }
            out.cycles.push_back(std::move(members));
        } else {
            out.undetermined.push_back({s, std::get<StopReason>(result)});
        }
        if (s == hi) {
            break;
        }
    }
    return out;
}

WorkerResult search_range(const MappingSpec& spec, std::int64_t lo, std::int64_t hi, const SearchBudget& budget)
{
    const BigInt fast_limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4);
    if (budget.max_magnitude <= fast_limit) {
        return search_chunk<std::int64_t>(spec, lo, hi, budget, budget.max_magnitude.convert_to<std::int64_t>());
    }
    return search_chunk<BigInt>(spec, lo, hi, budget, budget.max_magnitude);
}

Real ln_lambda_of(const MappingSpec& spec, std::span<const BigInt> members)
{
    Real sum = 0;
    for (const auto& m : members) {
        const auto& b = spec.branch(residue(m, spec.modulus()));
        const BigInt mult = b.multiplier < 0 ? BigInt(-b.multiplier) : BigInt(b.multiplier);
        sum += ln(Rational(mult, BigInt(spec.modulus())));
    }
    return sum;
}

} // namespace

CycleRecord canonicalize(const MappingSpec& spec, std::span<const BigInt> members)
{
    if (members.empty()) {
        throw std::invalid_argument("canonicalize: empty member list");
    }
    std::vector<BigInt> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("canonicalize: members repeat");
    }
    const auto n = members.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (apply(spec, members[i]) != members[(i + 1) % n]) {
            throw std::invalid_argument("canonicalize: members do not form a cycle of '" + spec.name() + "'");
        }
    }

    CycleRecord rec;
    const auto min_it = std::min_element(members.begin(), members.end());
    rec.members.assign(min_it, members.end());
    rec.members.insert(rec.members.end(), members.begin(), min_it);
    for (const auto& m : rec.members) {
        if (spec.kind(residue(m, spec.modulus())) == BranchKind::above) {
            ++rec.branch_counts.k1;
        } else {
            ++rec.branch_counts.k2;
        }
    }
    ScopedPrecision prec(kDefaultDigits);
    rec.lambda_side = ln_lambda_of(spec, rec.members) < 0 ? Side::PP : Side::PG;
    return rec;
}

ConditionCertificate certify(const MappingSpec& spec, const CycleRecord& cycle, const Rational& constant,
                             unsigned digits)
{
    using boost::multiprecision::abs;
    spec.require_two_factor();
    ScopedPrecision prec(digits);
    const FactorSystem f{spec.below_factor(), spec.above_factor(), constant, spec.modulus(), spec.modulus()};

    ConditionCertificate cert;
    cert.constant = constant;
    cert.m = *std::min_element(cycle.members.begin(), cycle.members.end(),
                               [](const BigInt& a, const BigInt& b) { return abs(a) < abs(b); });
    cert.m = abs(cert.m);

    const Real lnl = ln_lambda(cycle.branch_counts, f, digits);
    if (lnl == 0) {
        throw std::logic_error("certify: lambda = 1 is impossible for a two-factor map");
    }
    if (cycle.branch_counts.k1 == 0) {
        cert.vacuous = true;
        cert.C = 0;
        cert.ln_C = -std::numeric_limits<Real>::infinity();
    } else {
        auto c = condition_C(cycle.branch_counts.k1, abs(lnl), constant);
        cert.C = c.C;
        cert.ln_C = c.ln_C;
    }
    cert.holds = to_real(cert.m) <= cert.C;
    return cert;
}

CycleSearchResult find_cycles(const MappingSpec& spec, const IntRange& range, const SearchBudget& budget,
                              unsigned threads)
{
    if (range.lo > range.hi) {
        throw ConfigError("find_cycles: empty range");
    }
    if (budget.max_steps == 0 || budget.max_magnitude <= 0) {
        throw ConfigError("find_cycles: budget must be positive");
    }
    const auto span = static_cast<std::uint64_t>(static_cast<__int128>(range.hi) - range.lo + 1);
    threads = std::max(1u, threads);
    const std::uint64_t workers = std::min<std::uint64_t>(threads, span);

    std::vector<WorkerResult> partial(workers);
    if (workers == 1) {
        partial[0] = search_range(spec, range.lo, range.hi, budget);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = span / workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::int64_t lo = range.lo + static_cast<std::int64_t>(w * chunk);
            const std::int64_t hi = w + 1 == workers ? range.hi : lo + static_cast<std::int64_t>(chunk) - 1;
            pool.emplace_back([&, w, lo, hi] { partial[w] = search_range(spec, lo, hi, budget); });
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    // Merge by canonical rotation so the result is independent of sharding.
    std::map<std::vector<BigInt>, CycleRecord> unique;
    CycleSearchResult out;
    out.starts_examined = span;
    for (auto& part : partial) {
        for (const auto& members : part.cycles) {
            auto rec = canonicalize(spec, members);
            if (rec.least() < range.lo || rec.least() > range.hi) {
                continue;
            }
            unique.try_emplace(rec.members, std::move(rec));
        }
        out.undetermined.insert(out.undetermined.end(), part.undetermined.begin(), part.undetermined.end());
    }
    const auto constant = spec.is_two_factor() ? spec.default_constant() : std::nullopt;
    for (auto& [key, rec] : unique) {
        if (constant) {
            rec.certificate = certify(spec, rec, *constant);
        }
        out.cycles.push_back(std::move(rec));
    }
    std::sort(out.undetermined.begin(), out.undetermined.end(),
              [](const UndeterminedStart& a, const UndeterminedStart& b) { return a.start < b.start; });
    return out;
}

} // namespace collatz
