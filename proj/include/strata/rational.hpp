#pragma once

#include <compare>
#include <string>

#include "strata/checked.hpp"
#include "strata/error.hpp"

namespace strata {

/// Exact rational number over 128-bit integers, always stored reduced with a
/// positive denominator. Wide enough for billiard unfoldings with lcm of the
/// angle denominators up to ~10^18; anything larger throws ErrorKind::overflow
/// instead of silently wrapping.
class Rational {
public:
    Rational() = default;
    Rational(int128 num, int128 den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw Error(ErrorKind::domain, "zero denominator");
        normalize();
    }

    int128 num() const noexcept { return num_; }
    int128 den() const noexcept { return den_; }

    long long num64() const { return detail::to_int64(num_, "numerator"); }
    long long den64() const { return detail::to_int64(den_, "denominator"); }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }

    Rational operator+(const Rational& o) const {
        return Rational(detail::checked_add(detail::checked_mul(num_, o.den_), detail::checked_mul(o.num_, den_)),
                        detail::checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(detail::checked_add(detail::checked_mul(num_, o.den_), -detail::checked_mul(o.num_, den_)),
                        detail::checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(detail::checked_mul(num_, o.num_), detail::checked_mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error(ErrorKind::domain, "division by zero");
        return Rational(detail::checked_mul(num_, o.den_), detail::checked_mul(den_, o.num_));
    }
    Rational operator-() const { return Rational(-num_, den_); }

    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

    /// Largest integer <= value, as an exact integer.
    int128 floor() const { return detail::floor_div(num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int128 lhs = detail::checked_mul(a.num_, b.den_);
        int128 rhs = detail::checked_mul(b.num_, a.den_);
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const {
        if (den_ == 1) return detail::int128_str(num_);
        return detail::int128_str(num_) + "/" + detail::int128_str(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        int128 g = detail::gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    int128 num_ = 0;
    int128 den_ = 1;
};

inline long long lcm64(long long a, long long b) {
    if (a == 0 || b == 0) throw Error(ErrorKind::domain, "lcm of zero");
    int128 g = detail::gcd128(a, b);
    return detail::to_int64(detail::checked_mul(static_cast<int128>(a) / g, b), "lcm");
}

}  // namespace strata
