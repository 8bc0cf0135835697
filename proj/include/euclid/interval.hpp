#pragma once

#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace euclid {

/// Closed interval [lo, hi] of binary64 endpoints.
///
/// Every arithmetic operation returns an interval that contains the exact
/// real result for every choice of operands from its arguments. Endpoints
/// are rounded outward: an endpoint is stepped one ulp away from the
/// round-to-nearest result only when that result was inexact, so exact
/// computations (integer or dyadic data) stay exact.
///
/// The empty interval has one representation, lo = +inf and hi = -inf.
/// Signed zeros are normalized to +0.
class Interval {
public:
    /// The degenerate interval [0, 0].
    constexpr Interval() noexcept = default;

    /// Singleton [v, v]. Throws std::invalid_argument for NaN or infinite v.
    explicit Interval(double v);

    /// [lo, hi]. Throws std::invalid_argument for NaN endpoints or lo > hi.
    Interval(double lo, double hi);

    static constexpr Interval empty() noexcept
    {
        return Interval(Raw{}, std::numeric_limits<double>::infinity(),
                        -std::numeric_limits<double>::infinity());
    }
    static constexpr Interval entire() noexcept
    {
        return Interval(Raw{}, -std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity());
    }

    constexpr double lo() const noexcept { return lo_; }
    constexpr double hi() const noexcept { return hi_; }

    constexpr bool is_empty() const noexcept { return !(lo_ <= hi_); }
    bool is_singleton() const noexcept;
    constexpr bool is_zero() const noexcept { return lo_ == 0.0 && hi_ == 0.0; }
    constexpr bool contains(double v) const noexcept { return lo_ <= v && v <= hi_; }
    constexpr bool contains_zero() const noexcept { return contains(0.0); }
    constexpr bool excludes_zero() const noexcept { return !is_empty() && !contains_zero(); }
    /// Non-empty and every element is >= 0.
    constexpr bool nonnegative() const noexcept { return !is_empty() && lo_ >= 0.0; }
    /// Non-empty and every element is < 0.
    constexpr bool negative() const noexcept { return !is_empty() && hi_ < 0.0; }
    bool subset_of(const Interval& other) const noexcept;

    /// hi - lo rounded up; 0 for empty intervals.
    double width() const noexcept;
    /// Smallest absolute value over the interval (0 if it contains zero).
    double mignitude() const noexcept;
    /// Largest absolute value over the interval.
    double magnitude() const noexcept;

    friend bool operator==(const Interval& a, const Interval& b) noexcept
    {
        if (a.is_empty() || b.is_empty())
            return a.is_empty() && b.is_empty();
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    struct Raw {};
    constexpr Interval(Raw, double lo, double hi) noexcept
        : lo_(lo)
        , hi_(hi)
    {
    }

    // Arithmetic builds results through the unchecked constructor.
    friend Interval make_unchecked(double lo, double hi) noexcept;

    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval add(const Interval& a, const Interval& b) noexcept;
Interval sub(const Interval& a, const Interval& b) noexcept;
Interval mul(const Interval& a, const Interval& b) noexcept;
Interval neg(const Interval& a) noexcept;
/// Tight enclosure of { x*x : x in a }.
Interval sqr(const Interval& a) noexcept;

/// Relational division: the hull of { x : x*y in a for some y in b }.
///
/// When b excludes zero this is ordinary interval division a / b. When b
/// contains zero the exact set can be a union of two rays, and its hull (the
/// whole line) is returned; b = [0, 0] with 0 not in a yields empty.
Interval div_rel(const Interval& a, const Interval& b) noexcept;

/// Set intersection; exact.
Interval intersect(const Interval& a, const Interval& b) noexcept;
/// Smallest interval containing both.
Interval hull(const Interval& a, const Interval& b) noexcept;

inline Interval operator+(const Interval& a, const Interval& b) noexcept { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) noexcept { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) noexcept { return mul(a, b); }
inline Interval operator-(const Interval& a) noexcept { return neg(a); }

// Directed-rounding scalar kernels. Each returns the nearest double on the
// requested side of the exact real result.
namespace rounding {
double add_down(double a, double b) noexcept;
double add_up(double a, double b) noexcept;
double sub_down(double a, double b) noexcept;
double sub_up(double a, double b) noexcept;
double mul_down(double a, double b) noexcept;
double mul_up(double a, double b) noexcept;
double div_down(double a, double b) noexcept;
double div_up(double a, double b) noexcept;
} // namespace rounding

// --- Text conversion --------------------------------------------------------

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Largest double <= the decimal literal `text` (also accepts inf/-inf).
double parse_decimal_down(std::string_view text);
/// Smallest double >= the decimal literal `text` (also accepts inf/-inf).
double parse_decimal_up(std::string_view text);
/// [down(text), up(text)]: the tightest interval containing the decimal.
Interval parse_decimal(std::string_view text);

/// Shortest decimal whose downward conversion gives back `v` exactly.
std::string format_lower(double v);
/// Shortest decimal whose upward conversion gives back `v` exactly.
std::string format_upper(double v);

/// `[lo, hi]`, or `empty`. Re-parsing the two endpoints with the directed
/// conversions above recovers the interval bit for bit.
std::string format_interval(const Interval& i);

std::ostream& operator<<(std::ostream& os, const Interval& i);

} // namespace euclid
