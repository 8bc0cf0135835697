#include "euclid/interval.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace euclid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = std::numeric_limits<double>::max();

// Below this magnitude the FMA residual of a product or quotient may itself
// be rounded, so it no longer certifies exactness.
constexpr double kResidualFloor = 0x1p-968;
constexpr double kHugeDivisor = 0x1p1000;

double positive_zero(double v) noexcept { return v == 0.0 ? 0.0 : v; }

double step_down(double v) noexcept { return std::nextafter(v, -kInf); }
double step_up(double v) noexcept { return std::nextafter(v, kInf); }

} // namespace

Interval make_unchecked(double lo, double hi) noexcept;

Interval make_unchecked(double lo, double hi) noexcept
{
    if (!(lo <= hi))
        return Interval::empty();
    return Interval(Interval::Raw{}, positive_zero(lo), positive_zero(hi));
}

Interval::Interval(double v)
{
    if (!std::isfinite(v))
        throw std::invalid_argument("singleton interval needs a finite value");
    lo_ = hi_ = positive_zero(v);
}

Interval::Interval(double lo, double hi)
{
    if (std::isnan(lo) || std::isnan(hi))
        throw std::invalid_argument("interval endpoint is NaN");
    if (lo > hi)
        throw std::invalid_argument("interval lower endpoint exceeds upper endpoint");
    if (lo == kInf || hi == -kInf)
        throw std::invalid_argument("interval does not contain a real number");
    lo_ = positive_zero(lo);
    hi_ = positive_zero(hi);
}

bool Interval::is_singleton() const noexcept
{
    return lo_ == hi_ && std::isfinite(lo_);
}

bool Interval::subset_of(const Interval& other) const noexcept
{
    if (is_empty())
        return true;
    if (other.is_empty())
        return false;
    return other.lo_ <= lo_ && hi_ <= other.hi_;
}

double Interval::width() const noexcept
{
    if (is_empty())
        return 0.0;
    return rounding::sub_up(hi_, lo_);
}

double Interval::mignitude() const noexcept
{
    if (is_empty() || contains_zero())
        return 0.0;
    return std::min(std::fabs(lo_), std::fabs(hi_));
}

double Interval::magnitude() const noexcept
{
    if (is_empty())
        return 0.0;
    return std::max(std::fabs(lo_), std::fabs(hi_));
}

// --- Directed scalar kernels ---------------------------------------------

namespace rounding {

double add_down(double a, double b) noexcept
{
    const double s = a + b;
    if (!std::isfinite(s)) {
        if (std::isinf(a) || std::isinf(b))
            return s;
        return s > 0 ? kMax : s;
    }
    // TwoSum: err is the exact rounding error of a + b.
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return err < 0 ? step_down(s) : s;
}

double add_up(double a, double b) noexcept
{
    const double s = a + b;
    if (!std::isfinite(s)) {
        if (std::isinf(a) || std::isinf(b))
            return s;
        return s < 0 ? -kMax : s;
    }
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return err > 0 ? step_up(s) : s;
}

double sub_down(double a, double b) noexcept { return add_down(a, -b); }
double sub_up(double a, double b) noexcept { return add_up(a, -b); }

double mul_down(double a, double b) noexcept
{
    // 0 * inf counts as 0: selected reals are finite.
    if (a == 0.0 || b == 0.0)
        return 0.0;
    const double p = a * b;
    if (std::isinf(a) || std::isinf(b))
        return p;
    if (std::isinf(p))
        return p > 0 ? kMax : p;
    if (std::fabs(p) < kResidualFloor)
        return (a > 0) == (b > 0) ? std::max(step_down(p), 0.0) : step_down(p);
    const double err = std::fma(a, b, -p);
    return err < 0 ? step_down(p) : p;
}

double mul_up(double a, double b) noexcept
{
    if (a == 0.0 || b == 0.0)
        return 0.0;
    const double p = a * b;
    if (std::isinf(a) || std::isinf(b))
        return p;
    if (std::isinf(p))
        return p < 0 ? -kMax : p;
    if (std::fabs(p) < kResidualFloor)
        return (a > 0) == (b > 0) ? step_up(p) : std::min(step_up(p), 0.0);
    const double err = std::fma(a, b, -p);
    return err > 0 ? step_up(p) : p;
}

namespace {

// Sign of (a / b - fl(a / b)), or 2 when the residual cannot be trusted.
int quotient_error_sign(double a, double b, double q) noexcept
{
    if (std::fabs(q) < kResidualFloor || std::fabs(a) < kResidualFloor ||
        std::fabs(b) > kHugeDivisor)
        return 2;
    const double r = std::fma(-q, b, a);
    if (r == 0.0)
        return 0;
    return (r > 0) == (b > 0) ? 1 : -1;
}

} // namespace

double div_down(double a, double b) noexcept
{
    if (a == 0.0)
        return 0.0;
    const double q = a / b;
    if (std::isinf(a) || std::isinf(b))
        return q;
    if (std::isinf(q))
        return q > 0 ? kMax : q;
    const int s = quotient_error_sign(a, b, q);
    if (s == 2) // an untrusted step must not cross zero
        return (a > 0) == (b > 0) ? std::max(step_down(q), 0.0) : step_down(q);
    return s < 0 ? step_down(q) : q;
}

double div_up(double a, double b) noexcept
{
    if (a == 0.0)
        return 0.0;
    const double q = a / b;
    if (std::isinf(a) || std::isinf(b))
        return q;
    if (std::isinf(q))
        return q < 0 ? -kMax : q;
    const int s = quotient_error_sign(a, b, q);
    if (s == 2)
        return (a > 0) == (b > 0) ? step_up(q) : std::min(step_up(q), 0.0);
    return s > 0 ? step_up(q) : q;
}

} // namespace rounding

// --- Interval operations ------------------------------------------------------

using namespace rounding;

Interval add(const Interval& a, const Interval& b) noexcept
{
    if (a.is_empty() || b.is_empty())
        return Interval::empty();
    return make_unchecked(add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi()));
}

Interval sub(const Interval& a, const Interval& b) noexcept
{
    if (a.is_empty() || b.is_empty())
        return Interval::empty();
    return make_unchecked(sub_down(a.lo(), b.hi()), sub_up(a.hi(), b.lo()));
}

Interval mul(const Interval& a, const Interval& b) noexcept
{
    if (a.is_empty() || b.is_empty())
        return Interval::empty();
    const std::array<double, 4> lows{mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi()),
                                     mul_down(a.hi(), b.lo()), mul_down(a.hi(), b.hi())};
    const std::array<double, 4> highs{mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi()),
                                      mul_up(a.hi(), b.lo()), mul_up(a.hi(), b.hi())};
    return make_unchecked(*std::min_element(lows.begin(), lows.end()),
                          *std::max_element(highs.begin(), highs.end()));
}

Interval neg(const Interval& a) noexcept
{
    if (a.is_empty())
        return a;
    return make_unchecked(-a.hi(), -a.lo());
}

Interval sqr(const Interval& a) noexcept
{
    if (a.is_empty())
        return a;
    const double l = a.lo();
    const double h = a.hi();
    if (l >= 0)
        return make_unchecked(mul_down(l, l), mul_up(h, h));
    if (h <= 0)
        return make_unchecked(mul_down(h, h), mul_up(l, l));
    return make_unchecked(0.0, std::max(mul_up(l, l), mul_up(h, h)));
}

Interval div_rel(const Interval& a, const Interval& b) noexcept
{
    if (a.is_empty() || b.is_empty())
        return Interval::empty();

    const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();

    if (b.contains_zero()) {
        if (a.contains_zero())
            return Interval::entire();
        if (b.is_zero())
            return Interval::empty();
        if (bl < 0 && bh > 0)
            return Interval::entire(); // hull of two rays
        if (bl == 0) {
            // divisor in (0, bh]
            if (al > 0)
                return make_unchecked(div_down(al, bh), kInf);
            return make_unchecked(-kInf, div_up(ah, bh));
        }
        // divisor in [bl, 0)
        if (al > 0)
            return make_unchecked(-kInf, div_up(al, bl));
        return make_unchecked(div_down(ah, bl), kInf);
    }

    if (bl > 0) {
        if (al >= 0)
            return make_unchecked(div_down(al, bh), div_up(ah, bl));
        if (ah <= 0)
            return make_unchecked(div_down(al, bl), div_up(ah, bh));
        return make_unchecked(div_down(al, bl), div_up(ah, bl));
    }
    if (al >= 0)
        return make_unchecked(div_down(ah, bh), div_up(al, bl));
    if (ah <= 0)
        return make_unchecked(div_down(ah, bl), div_up(al, bh));
    return make_unchecked(div_down(ah, bh), div_up(al, bh));
}

Interval intersect(const Interval& a, const Interval& b) noexcept
{
    if (a.is_empty() || b.is_empty())
        return Interval::empty();
    return make_unchecked(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval hull(const Interval& a, const Interval& b) noexcept
{
    if (a.is_empty())
        return b;
    if (b.is_empty())
        return a;
    return make_unchecked(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

// --- Decimal conversion -------------------------------------------------------

namespace {

using boost::multiprecision::cpp_int;

// A finite decimal literal: (-1)^negative * digits * 10^exponent.
struct Decimal {
    bool negative = false;
    bool infinite = false;
    std::string digits; // no leading zeros; empty means zero
    long exponent = 0;
};

Decimal scan_decimal(std::string_view text)
{
    Decimal d;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        d.negative = text[i] == '-';
        ++i;
    }
    const std::string_view rest = text.substr(i);
    if (rest == "inf" || rest == "infinity") {
        d.infinite = true;
        return d;
    }

    std::size_t mantissa_digits = 0;
    long frac_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        d.digits.push_back(text[i++]);
        ++mantissa_digits;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            d.digits.push_back(text[i++]);
            ++mantissa_digits;
            ++frac_digits;
        }
    }
    if (mantissa_digits == 0)
        throw ParseError("malformed number '" + std::string(text) + "'");

    long exp10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        const auto* begin = text.data() + i;
        const auto* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, exp10);
        if (ec != std::errc{} || ptr == begin)
            throw ParseError("malformed exponent in '" + std::string(text) + "'");
        i = static_cast<std::size_t>(ptr - text.data());
        if (exp_negative)
            exp10 = -exp10;
    }
    if (i != text.size())
        throw ParseError("malformed number '" + std::string(text) + "'");

    const auto first = d.digits.find_first_not_of('0');
    d.digits = first == std::string::npos ? std::string{} : d.digits.substr(first);
    while (!d.digits.empty() && d.digits.back() == '0') {
        d.digits.pop_back();
        ++exp10;
    }
    d.exponent = exp10 - frac_digits;
    return d;
}

cpp_int pow10(long n)
{
    cpp_int r = 1;
    cpp_int base = 10;
    while (n > 0) {
        if (n & 1)
            r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

// Sign of (|decimal| - |v|) for finite v.
int compare_magnitude(const Decimal& d, double v)
{
    const double av = std::fabs(v);
    if (d.digits.empty())
        return av == 0.0 ? 0 : -1;
    if (av == 0.0)
        return 1;
    int e2 = 0;
    const double frac = std::frexp(av, &e2);
    const auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
    e2 -= 53;

    cpp_int lhs(d.digits);
    cpp_int rhs = mant;
    if (d.exponent >= 0)
        lhs *= pow10(d.exponent);
    else
        rhs *= pow10(-d.exponent);
    if (e2 >= 0)
        rhs <<= e2;
    else
        lhs <<= -e2;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

struct Bracket {
    double down;
    double up;
};

Bracket bracket_decimal(std::string_view text)
{
    const Decimal d = scan_decimal(text);
    if (d.infinite) {
        const double v = d.negative ? -kInf : kInf;
        return {v, v};
    }
    if (d.digits.empty())
        return {0.0, 0.0};

    // Position of the leading digit; decides out-of-range literals without
    // building enormous integers.
    const long lead = static_cast<long>(d.digits.size()) - 1 + d.exponent;
    const double tiny = std::numeric_limits<double>::denorm_min();
    if (lead > 310) {
        return d.negative ? Bracket{-kInf, -kMax} : Bracket{kMax, kInf};
    }
    if (lead < -330) {
        return d.negative ? Bracket{-tiny, 0.0} : Bracket{0.0, tiny};
    }

    std::string canonical = d.digits + "e" + std::to_string(d.exponent);
    double nearest = 0.0;
    auto [ptr, ec] = std::from_chars(canonical.data(), canonical.data() + canonical.size(), nearest);
    (void)ptr;
    if (ec == std::errc::result_out_of_range || std::isinf(nearest)) {
        if (lead > 0)
            return d.negative ? Bracket{-kInf, -kMax} : Bracket{kMax, kInf};
        return d.negative ? Bracket{-tiny, 0.0} : Bracket{0.0, tiny};
    }
    if (ec != std::errc{})
        throw ParseError("malformed number '" + std::string(text) + "'");

    const int cmp = compare_magnitude(d, nearest);
    double lo = nearest;
    double hi = nearest;
    if (cmp < 0)
        lo = std::nextafter(nearest, 0.0);
    else if (cmp > 0)
        hi = std::nextafter(nearest, kInf);
    if (d.negative)
        return {-hi, positive_zero(-lo)};
    return {lo, hi};
}

// Render sign * digits * 10^exp10 in plain or scientific notation.
std::string render(bool negative, std::string digits, long exp10)
{
    const auto first = digits.find_first_not_of('0');
    if (first == std::string::npos)
        return "0";
    digits = digits.substr(first);
    while (digits.size() > 1 && digits.back() == '0') {
        digits.pop_back();
        ++exp10;
    }
    const long n = static_cast<long>(digits.size());
    const long lead = n - 1 + exp10;
    std::string out = negative ? "-" : "";
    if (lead >= -5 && lead < 17) {
        if (exp10 >= 0) {
            out += digits + std::string(static_cast<std::size_t>(exp10), '0');
        } else if (lead >= 0) {
            out += digits.substr(0, static_cast<std::size_t>(lead + 1)) + "." +
                   digits.substr(static_cast<std::size_t>(lead + 1));
        } else {
            out += "0." + std::string(static_cast<std::size_t>(-lead - 1), '0') + digits;
        }
    } else {
        out += digits.substr(0, 1);
        if (n > 1)
            out += "." + digits.substr(1);
        out += "e" + std::to_string(lead);
    }
    return out;
}

std::string increment(const std::string& digits)
{
    std::string r = digits;
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
        if (*it != '9') {
            ++*it;
            return r;
        }
        *it = '0';
    }
    return "1" + r;
}

std::string decrement(const std::string& digits)
{
    std::string r = digits;
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
        if (*it != '0') {
            --*it;
            return r;
        }
        *it = '9';
    }
    return r;
}

template <class Check>
std::string format_directed(double v, Check converts_back)
{
    if (std::isinf(v))
        return v < 0 ? "-inf" : "inf";
    if (v == 0.0)
        return "0";
    std::array<char, 64> buf{};
    for (int precision = 1; precision <= 40; ++precision) {
        auto res = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(v),
                                 std::chars_format::scientific, precision - 1);
        const std::string s(buf.data(), res.ptr);
        // s looks like d[.ddd]e[+-]xx
        const auto epos = s.find('e');
        std::string digits;
        for (std::size_t k = 0; k < epos; ++k)
            if (s[k] != '.')
                digits.push_back(s[k]);
        const long lead = std::stol(s.substr(epos + 1));
        const long exp10 = lead - (precision - 1);
        for (const auto& candidate : {digits, increment(digits), decrement(digits)}) {
            std::string text = render(v < 0, candidate, exp10);
            if (converts_back(text))
                return text;
        }
    }
    // 40 significant digits always separate neighbouring doubles; unreachable.
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

} // namespace

double parse_decimal_down(std::string_view text) { return bracket_decimal(text).down; }
double parse_decimal_up(std::string_view text) { return bracket_decimal(text).up; }

Interval parse_decimal(std::string_view text)
{
    const Bracket b = bracket_decimal(text);
    if (std::isinf(b.down) && b.down == b.up)
        throw ParseError("'" + std::string(text) + "' is not a real number");
    return make_unchecked(b.down, b.up);
}

std::string format_lower(double v)
{
    return format_directed(v, [v](const std::string& t) { return parse_decimal_down(t) == v; });
}

std::string format_upper(double v)
{
    return format_directed(v, [v](const std::string& t) { return parse_decimal_up(t) == v; });
}

std::string format_interval(const Interval& i)
{
    if (i.is_empty())
        return "empty";
    return "[" + format_lower(i.lo()) + ", " + format_upper(i.hi()) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& i)
{
    return os << format_interval(i);
}

} // namespace euclid
