#pragma once

#include <cstdint>
#include <ostream>

namespace tsum {

/// Three-valued sign, totally ordered Minus < Zero < Plus.
enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign flip(Sign s) {
    return static_cast<Sign>(-static_cast<std::int8_t>(s));
}

constexpr char to_char(Sign s) {
    return s == Sign::Minus ? '-' : (s == Sign::Zero ? '0' : '+');
}

/// Sign of an int comparison result (<0, 0, >0).
constexpr Sign sign_of_cmp(int cmp) {
    return cmp < 0 ? Sign::Minus : (cmp > 0 ? Sign::Plus : Sign::Zero);
}

inline std::ostream& operator<<(std::ostream& os, Sign s) {
    return os << to_char(s);
}

} // namespace tsum
