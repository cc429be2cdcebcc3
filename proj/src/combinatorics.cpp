#include "collatz/combinatorics.hpp"

#include <stdexcept>

namespace collatz {

std::string to_string(LogFactorialMode mode)
{
    switch (mode) {
    case LogFactorialMode::exact:
        return "exact";
    case LogFactorialMode::stirling:
        return "stirling";
    case LogFactorialMode::ramanujan:
        return "ramanujan";
    }
    return "exact";
}

LogFactorialMode parse_log_factorial_mode(const std::string& text)
{
    if (text == "exact") {
        return LogFactorialMode::exact;
    }
    if (text == "stirling") {
        return LogFactorialMode::stirling;
    }
    if (text == "ramanujan") {
        return LogFactorialMode::ramanujan;
    }
    throw ConfigError("unknown r-mode '" + text + "' (expected exact, stirling or ramanujan)");
}

BigInt class_count(int above_branches, int below_branches, std::int64_t k1, std::int64_t k2)
{
    if (k1 < 0 || k2 < 0) {
        throw std::invalid_argument("class_count: negative step count");
    }
    BigInt binom;
    mpz_bin_uiui(binom.backend().data(), static_cast<unsigned long>(k1 + k2), static_cast<unsigned long>(k2));
    return binom * boost::multiprecision::pow(BigInt(above_branches), static_cast<unsigned>(k1)) *
           boost::multiprecision::pow(BigInt(below_branches), static_cast<unsigned>(k2));
}

BigInt eta(int base, std::int64_t k1, std::int64_t k2)
{
    return class_count(base - 1, 1, k1, k2);
}

namespace {

Real log_factorial_here(std::int64_t n, LogFactorialMode mode)
{
    using boost::multiprecision::log;
    if (n < 0) {
        throw std::invalid_argument("log_factorial: negative argument");
    }
    if (mode == LogFactorialMode::exact) {
        return lngamma(Real(n) + 1);
    }
    if (n == 0) {
        throw std::invalid_argument("log_factorial: asymptotic formulas need n >= 1");
    }
    const Real x(n);
    const Real base = x * log(x) - x;
    if (mode == LogFactorialMode::stirling) {
        return base + log(2 * pi() * x) / 2;
    }
    const Real poly = 8 * x * x * x + 4 * x * x + x + Real(1) / 30;
    return base + log(poly) / 6 + log(pi()) / 2;
}

// ln 0! = 0 is substituted for the asymptotic modes.
Real log_factorial_or_zero(std::int64_t n, LogFactorialMode mode)
{
    return n == 0 ? Real(0) : log_factorial_here(n, mode);
}

} // namespace

Real log_factorial(std::int64_t n, LogFactorialMode mode, unsigned digits)
{
    ScopedPrecision prec(digits);
    return log_factorial_here(n, mode);
}

RepartitionValue repartition(int base, std::int64_t k1, std::int64_t k2, LogFactorialMode mode, unsigned digits)
{
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    if (k1 < 0 || k2 < 0 || k1 + k2 < 1) {
        throw std::invalid_argument("repartition: need k1, k2 >= 0 and k1 + k2 >= 1");
    }
    if (base < 2) {
        throw std::invalid_argument("repartition: base must be >= 2");
    }
    ScopedPrecision prec(digits);
    const std::int64_t k = k1 + k2;
    const Real ln_base = log(Real(base));
    const Real ln_choices = base > 2 ? Real(k1) * log(Real(base - 1)) : Real(0);

    RepartitionValue out;
    out.mode = mode;
    out.base = base;
    if (mode == LogFactorialMode::exact) {
        const Real ln_eta = log_factorial_here(k, mode) - log_factorial_here(k1, mode) -
                            log_factorial_here(k2, mode) + ln_choices;
        // ln(eta + 1) = ln eta + ln(1 + 1/eta)
        out.ln_R = Real(k) * ln_base - (ln_eta + log1p(exp(-ln_eta)));
    } else {
        out.ln_R = Real(k) * ln_base - ln_choices + log_factorial_or_zero(k1, mode) +
                   log_factorial_or_zero(k2, mode) - log_factorial_or_zero(k, mode);
    }
    return out;
}

} // namespace collatz
