#pragma once

#include <ostream>
#include <string_view>

namespace euclid {

/// Verdict of a geometric test. True and False are proofs over every
/// selection from the operand sets; Undetermined proves nothing.
enum class Truth : unsigned char { False, True, Undetermined };

/// Strong Kleene conjunction.
constexpr Truth and3(Truth a, Truth b) noexcept
{
    if (a == Truth::False || b == Truth::False)
        return Truth::False;
    if (a == Truth::True && b == Truth::True)
        return Truth::True;
    return Truth::Undetermined;
}

constexpr Truth not3(Truth a) noexcept
{
    switch (a) {
    case Truth::False:
        return Truth::True;
    case Truth::True:
        return Truth::False;
    default:
        return Truth::Undetermined;
    }
}

constexpr Truth or3(Truth a, Truth b) noexcept { return not3(and3(not3(a), not3(b))); }

constexpr bool is_definite(Truth t) noexcept { return t != Truth::Undetermined; }

constexpr Truth truth_of(bool b) noexcept { return b ? Truth::True : Truth::False; }

constexpr std::string_view to_string(Truth t) noexcept
{
    switch (t) {
    case Truth::False:
        return "false";
    case Truth::True:
        return "true";
    default:
        return "undetermined";
    }
}

inline std::ostream& operator<<(std::ostream& os, Truth t) { return os << to_string(t); }

} // namespace euclid
