#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strata/double_cover.hpp"
#include "strata/pattern.hpp"

namespace strata {

/// Parity of a spin structure: even (Phi = 0), odd (Phi = 1), or undefined
/// (the pattern has an order 2 mod 4 / an odd Abelian order). Equality
/// compares the state only; undefined reasons are informational.
class SpinParity {
public:
    static SpinParity even() { return SpinParity(State::Even); }
    static SpinParity odd() { return SpinParity(State::Odd); }
    static SpinParity undefined(std::string reason) { return SpinParity(State::Undefined, std::move(reason)); }
    static SpinParity from_bit(int phi) { return phi % 2 ? odd() : even(); }

    bool defined() const noexcept { return state_ != State::Undefined; }
    bool is_even() const noexcept { return state_ == State::Even; }
    bool is_odd() const noexcept { return state_ == State::Odd; }

    /// Phi as 0/1; throws on undefined parity.
    int bit() const {
        if (!defined()) throw Error(ErrorKind::domain, "spin parity is undefined: " + reason_);
        return state_ == State::Odd ? 1 : 0;
    }

    const std::string& reason() const noexcept { return reason_; }

    std::string str() const {
        switch (state_) {
            case State::Even: return "even";
            case State::Odd: return "odd";
            default: return "undefined";
        }
    }

    friend bool operator==(const SpinParity& a, const SpinParity& b) noexcept { return a.state_ == b.state_; }

private:
    enum class State { Even, Odd, Undefined };
    explicit SpinParity(State s, std::string reason = "") : state_(s), reason_(std::move(reason)) {}
    State state_;
    std::string reason_;
};

namespace detail {

inline std::pair<int128, int128> residue_counts_wide(const Pattern& p) {
    int128 n_plus = 0, n_minus = 0;
    for (const auto& e : p.entries()) {
        switch (mod_nonneg(e.order, 4)) {
            case 1: n_plus = checked_add(n_plus, e.count); break;
            case 3: n_minus = checked_add(n_minus, e.count); break;
            default: break;
        }
    }
    return {n_plus, n_minus};
}

}  // namespace detail

/// Residue-class counts behind the closed form, for reporting.
struct ResidueCounts {
    long long n_plus = 0;   // orders = 1 mod 4
    long long n_minus = 0;  // orders = 3 mod 4 (poles included)
};

inline ResidueCounts residue_counts(const Pattern& p) {
    auto [n_plus, n_minus] = detail::residue_counts_wide(p);
    return {detail::to_int64(n_plus, "n_plus"), detail::to_int64(n_minus, "n_minus")};
}

/// Closed form: with n+1 = #{k = 1 mod 4} and n-1 = #{k = 3 mod 4} (poles
/// count as 3 mod 4; orders 0 mod 4 and marked points are ignored),
/// Phi = [ |n+1 - n-1| / 4 ] mod 2.
inline SpinParity spin_parity_closed(const Pattern& p) {
    if (!p.is_quadratic()) throw Error(ErrorKind::flavor, "closed-form spin parity applies to quadratic patterns");
    if (auto s = spin_defined(p); !s.defined) return SpinParity::undefined(s.reason);
    auto [n_plus, n_minus] = detail::residue_counts_wide(p);
    int128 diff = n_plus - n_minus;
    if (diff < 0) diff = -diff;
    return SpinParity::from_bit(static_cast<int>((diff / 4) % 2));
}

/// Intermediate sum form over an ordered list of 2n odd orders:
///   Phi = 1/4 * sum_{j=1}^{n-1} (k_1+...+k_{2j})(k_{2j}+k_{2j+1})  mod 2
/// for n >= 2, and Phi = 0 for n in {0,1}. The list is taken in the caller's
/// order; the value is order-independent, which is exactly what the
/// order-invariance tests exercise. The division by 4 is exact (asserted).
inline SpinParity spin_parity_sum(std::span<const long long> odd_orders) {
    const std::size_t len = odd_orders.size();
    if (len % 2 != 0) throw Error(ErrorKind::domain, "odd-order list must have even length");
    int128 total = 0;
    for (long long k : odd_orders) {
        if (detail::mod_nonneg(k, 2) == 0) throw Error(ErrorKind::domain, "entry " + std::to_string(k) + " is even");
        if (k < -1) throw Error(ErrorKind::order, "entry " + std::to_string(k) + " below -1");
        total = detail::checked_add(total, k);
    }
    if (detail::mod_nonneg(total, 4) != 0)
        throw Error(ErrorKind::sum, "odd-order sum " + detail::int128_str(total) + " is not 0 mod 4");
    const std::size_t n = len / 2;
    if (n < 2) return SpinParity::even();

    int128 sum = 0;
    int128 prefix = 0;  // k_1 + ... + k_{2j}
    for (std::size_t j = 1; j <= n - 1; ++j) {
        prefix = detail::checked_add(prefix, odd_orders[2 * j - 2]);
        prefix = detail::checked_add(prefix, odd_orders[2 * j - 1]);
        const int128 bridge = static_cast<int128>(odd_orders[2 * j - 1]) + odd_orders[2 * j];
        sum = detail::checked_add(sum, detail::checked_mul(prefix, bridge));
    }
    if (sum % 4 != 0) throw Error(ErrorKind::domain, "internal: sum form not divisible by 4");
    return SpinParity::from_bit(detail::mod_nonneg(sum / 4, 2));
}

/// Parity of the hyperelliptic component with a single zero, H(2g-2)^hyp:
/// [ (g+1)/2 ] mod 2, for g >= 2.
inline SpinParity hyperelliptic_parity_single(long long g) {
    if (g < 2) throw Error(ErrorKind::domain, "H(2g-2) hyperelliptic parity requires g >= 2");
    return SpinParity::from_bit(static_cast<int>(((g + 1) / 2) % 2));
}

/// Parity of the hyperelliptic component with two zeros, H(g-1,g-1)^hyp:
/// (g+1)/2 mod 2, defined for odd g >= 3.
inline SpinParity hyperelliptic_parity_double(long long g) {
    if (g < 3 || g % 2 == 0)
        throw Error(ErrorKind::domain, "H(g-1,g-1) hyperelliptic parity requires odd g >= 3");
    return SpinParity::from_bit(static_cast<int>(((g + 1) / 2) % 2));
}

/// The pattern's odd orders in canonical (non-increasing) order, explicitly
/// expanded. The cap keeps the quadratic/cubic sum and Arf routes tractable;
/// callers hitting it get ErrorKind::overflow rather than a stall.
inline std::vector<long long> odd_orders(const Pattern& p, long long limit = 4096) {
    int128 total = 0;
    for (const auto& e : p.entries())
        if (detail::mod_nonneg(e.order, 2) == 1) total = detail::checked_add(total, e.count);
    if (total > limit)
        throw Error(ErrorKind::overflow, "pattern has " + detail::int128_str(total) +
                                             " odd orders; the sum/Arf routes are capped at " + std::to_string(limit));
    std::vector<long long> odd;
    odd.reserve(static_cast<std::size_t>(total));
    for (const auto& e : p.entries())
        if (detail::mod_nonneg(e.order, 2) == 1)
            for (long long i = 0; i < e.count; ++i) odd.push_back(e.order);
    return odd;
}

/// Connected-component label "H^even(...)" / "H^odd(...)" for an Abelian
/// pattern with a defined parity.
inline std::string component_label(const Pattern& p, const SpinParity& parity) {
    if (!p.is_abelian()) throw Error(ErrorKind::flavor, "component labels apply to Abelian patterns");
    if (auto s = spin_defined(p); !s.defined)
        throw Error(ErrorKind::domain, "spin structure undefined: " + s.reason);
    if (!parity.defined()) throw Error(ErrorKind::domain, "cannot label an undefined parity");
    const std::string body = format_pattern(p);
    return std::string("H^") + (parity.is_odd() ? "odd" : "even") + body.substr(1);
}

}  // namespace strata
