#pragma once

#include <cstdint>
#include <limits>

#include "strata/error.hpp"

namespace strata {

/// 128-bit signed integer used for exact intermediate arithmetic.
using int128 = __int128;

namespace detail {

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "128-bit addition overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "128-bit multiplication overflow");
    return r;
}

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Narrow to int64, throwing instead of wrapping.
inline long long to_int64(int128 v, const char* what = "value") {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw Error(ErrorKind::overflow, std::string(what) + " exceeds 64-bit range");
    return static_cast<long long>(v);
}

inline std::string int128_str(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string s;
    while (u != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

/// Floored quotient (rounds toward negative infinity), exact integers.
inline int128 floor_div(int128 num, int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int128 q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

/// Canonical residue in [0, m).
inline int mod_nonneg(int128 v, int m) {
    int r = static_cast<int>(v % m);
    return r < 0 ? r + m : r;
}

}  // namespace detail
}  // namespace strata
