#include "collatz/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <ios>

namespace collatz {

ScopedPrecision::ScopedPrecision(unsigned digits) : previous_(Real::default_precision())
{
    Real::default_precision(digits);
}

ScopedPrecision::~ScopedPrecision()
{
    Real::default_precision(previous_);
}

Real to_real(const Rational& q)
{
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

Real to_real(const BigInt& z)
{
    Real r;
    mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
    return r;
}

Real ln(const Rational& q)
{
    return boost::multiprecision::log(to_real(q));
}

Real expm1(const Real& x)
{
    Real r(0, x.precision());
    mpfr_expm1(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Real log1p(const Real& x)
{
    Real r(0, x.precision());
    mpfr_log1p(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Real lngamma(const Real& x)
{
    Real r(0, x.precision());
    mpfr_lngamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Real pi()
{
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

int residue(const BigInt& n, int d)
{
    BigInt r = n % d;
    if (r < 0) {
        r += d;
    }
    return r.convert_to<int>();
}

int residue(std::int64_t n, int d)
{
    std::int64_t r = n % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

std::optional<std::int64_t> to_int64(const BigInt& z)
{
    if (!mpz_fits_slong_p(z.backend().data())) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(mpz_get_si(z.backend().data()));
}

std::string group_thousands(const std::string& digits)
{
    std::string sign;
    std::string body = digits;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        sign = body.substr(0, 1);
        body.erase(0, 1);
    }
    std::string out;
    const auto n = body.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(body[i]);
        const auto rest = n - i - 1;
        if (rest > 0 && rest % 3 == 0) {
            out.push_back(',');
        }
    }
    return sign + out;
}

std::string round_decimal_string(const std::string& text, int decimals)
{
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    auto dot = s.find('.');
    std::string int_part = dot == std::string::npos ? s : s.substr(0, dot);
    std::string frac = dot == std::string::npos ? std::string() : s.substr(dot + 1);
    if (int_part.empty()) {
        int_part = "0";
    }

    const auto keep = static_cast<std::size_t>(std::max(decimals, 0));
    bool round_up = frac.size() > keep && frac[keep] >= '5';
    if (frac.size() < keep) {
        frac.append(keep - frac.size(), '0');
    }
    frac.resize(keep);

    std::string digits = int_part + frac;
    if (round_up) {
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0) {
            if (digits[i] == '9') {
                digits[i] = '0';
                --i;
            } else {
                ++digits[i];
                break;
            }
        }
        if (i < 0) {
            digits.insert(digits.begin(), '1');
        }
    }
    std::string int_out = digits.substr(0, digits.size() - keep);
    std::string frac_out = digits.substr(digits.size() - keep);
    auto first = int_out.find_first_not_of('0');
    int_out = first == std::string::npos ? "0" : int_out.substr(first);

    const bool zero = std::all_of(digits.begin(), digits.end(), [](char c) { return c == '0'; });
    std::string out = (negative && !zero) ? "-" : "";
    out += int_out;
    if (keep > 0) {
        out += "." + frac_out;
    }
    return out;
}

namespace {

std::string apply_grouping(const std::string& fixed, bool thousands)
{
    if (!thousands) {
        return fixed;
    }
    auto dot = fixed.find('.');
    if (dot == std::string::npos) {
        return group_thousands(fixed);
    }
    return group_thousands(fixed.substr(0, dot)) + fixed.substr(dot);
}

} // namespace

std::string format_fixed(const Real& x, int decimals, bool thousands)
{
    // Guard digits first, then half-up at the requested place.
    const std::string wide = x.str(decimals + 12, std::ios::fixed);
    return apply_grouping(round_decimal_string(wide, decimals), thousands);
}

std::string format_fixed(double x, int decimals, bool thousands)
{
    ScopedPrecision prec(30);
    return format_fixed(Real(x), decimals, thousands);
}

std::string format_sci(const Real& x, int significant)
{
    return x.str(significant - 1, std::ios::scientific);
}

Rational parse_rational(const std::string& text)
{
    auto bad = [&]() { return ConfigError("not a rational number: '" + text + "'"); };
    if (text.empty()) {
        throw bad();
    }
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        return i < s.size() &&
               std::all_of(s.begin() + static_cast<long>(i), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        auto p = text.substr(0, slash);
        auto q = text.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) {
            throw bad();
        }
        BigInt den(q);
        if (den == 0) {
            throw bad();
        }
        return Rational(BigInt(p), den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        if (!is_int(text)) {
            throw bad();
        }
        return Rational(BigInt(text));
    }
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") {
        whole += "0";
    }
    if (!is_int(whole) || (!frac.empty() && !is_int(frac)) || (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))) {
        throw bad();
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt num = boost::multiprecision::abs(BigInt(whole)) * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
    if (negative) {
        num = -num;
    }
    return Rational(num, scale);
}

std::string to_string(const Rational& q)
{
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace collatz
