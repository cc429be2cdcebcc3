#ifndef COLLATZ_NUMERIC_HPP
#define COLLATZ_NUMERIC_HPP

// Number types shared by every module: exact integers and rationals backed by
// GMP, and variable-precision reals backed by MPFR.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace collatz {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;
inline constexpr unsigned kMinDigits = 20;
inline constexpr unsigned kMaxDigits = 10000;

/// Invalid user input: bad mapping, malformed range, unresolvable node.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The adaptive precision guard wanted more than the hard digit cap.
class PrecisionCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sets the working precision of newly created Real values (decimal digits)
/// for the lifetime of the object and restores the previous one on exit.
///
/// MPFR precision in Boost.Multiprecision is a process-wide default, so
/// high-precision work is kept on one thread at a time; the parallel parts
/// of the library (cycle search, window enumeration) are integer-only.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned previous_;
};

Real to_real(const Rational& q);
Real to_real(const BigInt& z);
Real ln(const Rational& q);
Real expm1(const Real& x);
Real log1p(const Real& x);
/// ln Γ(x), correctly rounded at the precision of x.
Real lngamma(const Real& x);
Real pi();

/// Mathematical residue of n modulo d, always in [0, d).
int residue(const BigInt& n, int d);
int residue(std::int64_t n, int d);

std::optional<std::int64_t> to_int64(const BigInt& z);

/// Fixed-point decimal rendering with half-up rounding at `decimals`
/// places; optional thousands separators in the integer part.
std::string format_fixed(const Real& x, int decimals, bool thousands = false);
std::string format_fixed(double x, int decimals, bool thousands = false);
/// Scientific rendering with `significant` digits.
std::string format_sci(const Real& x, int significant);
/// Inserts thousands separators into a plain integer string.
std::string group_thousands(const std::string& digits);

/// Round-half-up of a decimal string such as "-12.34567" to `decimals`
/// places. Exposed for testing.
std::string round_decimal_string(const std::string& text, int decimals);

/// Parses "p/q", "p", or a decimal such as "0.25" into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

} // namespace collatz

#endif // COLLATZ_NUMERIC_HPP
