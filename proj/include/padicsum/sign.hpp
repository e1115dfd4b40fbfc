#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padicsum {

/// The sign parameter epsilon = +1 or -1.
enum class Sign : int { plus = 1, minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

inline Sign negate(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// epsilon^e.
inline int sign_pow(Sign s, std::uint64_t e) {
    return (s == Sign::minus && (e % 2 == 1)) ? -1 : 1;
}

inline Sign sign_from_int(long v) {
    if (v == 1) return Sign::plus;
    if (v == -1) return Sign::minus;
    throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(v));
}

inline std::string to_string(Sign s) { return s == Sign::plus ? "+1" : "-1"; }

}  // namespace padicsum
