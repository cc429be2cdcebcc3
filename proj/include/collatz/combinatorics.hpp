#ifndef COLLATZ_COMBINATORICS_HPP
#define COLLATZ_COMBINATORICS_HPP

// Trajectory class counts eta, the average repartition R = d^k / (eta + 1)
// and log-factorials with exact and asymptotic backends.

#include <cstdint>
#include <string>

#include "collatz/numeric.hpp"

namespace collatz {

enum class LogFactorialMode { exact, stirling, ramanujan };

std::string to_string(LogFactorialMode mode);
LogFactorialMode parse_log_factorial_mode(const std::string& text);

/// Number of starts among d^k consecutive integers whose first k steps take
/// k1 expanding and k2 contracting branches: C(k, k2) (d-1)^k1.
BigInt eta(int base, std::int64_t k1, std::int64_t k2);

/// Same count for a map with `above_branches` expanding residues and
/// `below_branches` contracting ones.
BigInt class_count(int above_branches, int below_branches, std::int64_t k1, std::int64_t k2);

/// ln(n!) at `digits` decimal digits. Exact mode is the correctly rounded
/// value (MPFR lngamma); the asymptotic modes reject n = 0.
Real log_factorial(std::int64_t n, LogFactorialMode mode, unsigned digits = kDefaultDigits);

struct RepartitionValue {
    Real ln_R;
    LogFactorialMode mode = LogFactorialMode::exact;
    int base = 3;
};

/// Exact mode: ln(d^k / (eta + 1)). Asymptotic modes drop the +1 and
/// evaluate k ln d - k1 ln(d-1) + ln k1! + ln k2! - ln k! with 0! = 1.
RepartitionValue repartition(int base, std::int64_t k1, std::int64_t k2, LogFactorialMode mode,
                             unsigned digits = kDefaultDigits);

} // namespace collatz

#endif // COLLATZ_COMBINATORICS_HPP
