#pragma once

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strata/checked.hpp"
#include "strata/error.hpp"

namespace strata {

enum class Flavor { Abelian, Quadratic };

inline std::string_view to_string(Flavor f) { return f == Flavor::Abelian ? "Abelian" : "Quadratic"; }

/// One run of equal singularity orders: `order` repeated `count` times.
/// The run-length form keeps billiard unfoldings with ~10^18 equal zeros
/// representable; explicit expansion is guarded (see Pattern::expanded).
struct PatternEntry {
    long long order;
    long long count;
    friend bool operator==(const PatternEntry&, const PatternEntry&) = default;
};

/// A singularity pattern: the multiset of orders of an Abelian (H) or
/// quadratic (Q) differential, canonically stored in non-increasing order.
/// Marked points (order 0) are legal entries in both flavors. Immutable
/// after construction; construction validates the flavor's invariants:
///   Quadratic: all k >= -1, sum(k) == 0 (mod 4), sum(k) >= -4
///   Abelian:   all k >= 0,  sum(k) even
class Pattern {
public:
    Pattern() = delete;

    static Pattern abelian(std::span<const long long> orders) { return Pattern(Flavor::Abelian, collect(orders)); }
    static Pattern abelian(std::initializer_list<long long> orders) {
        return abelian(std::span<const long long>(orders.begin(), orders.size()));
    }
    static Pattern quadratic(std::span<const long long> orders) { return Pattern(Flavor::Quadratic, collect(orders)); }
    static Pattern quadratic(std::initializer_list<long long> orders) {
        return quadratic(std::span<const long long>(orders.begin(), orders.size()));
    }
    static Pattern empty(Flavor f) { return Pattern(f, {}); }

    /// Build from run-length entries (orders need not be sorted or distinct).
    static Pattern from_entries(Flavor f, std::vector<PatternEntry> entries) {
        return Pattern(f, canonicalize(std::move(entries)));
    }

    Flavor flavor() const noexcept { return flavor_; }
    bool is_quadratic() const noexcept { return flavor_ == Flavor::Quadratic; }
    bool is_abelian() const noexcept { return flavor_ == Flavor::Abelian; }

    /// Runs with strictly decreasing orders and counts >= 1.
    const std::vector<PatternEntry>& entries() const noexcept { return entries_; }

    bool is_empty() const noexcept { return entries_.empty(); }

    /// Number of singularities n (marked points included).
    long long size() const {
        int128 n = 0;
        for (const auto& e : entries_) n = detail::checked_add(n, e.count);
        return detail::to_int64(n, "singularity count");
    }

    /// Sum of the orders.
    long long order_sum() const { return detail::to_int64(order_sum_wide(), "order sum"); }

    long long count_of(long long order) const noexcept {
        for (const auto& e : entries_)
            if (e.order == order) return e.count;
        return 0;
    }

    /// Explicit non-increasing order list. Throws ErrorKind::overflow when the
    /// multiset is too large to materialize.
    std::vector<long long> expanded(long long limit = kExpandLimit) const {
        long long n = size();
        if (n > limit) throw Error(ErrorKind::overflow, "pattern too large to expand explicitly");
        std::vector<long long> out;
        out.reserve(static_cast<std::size_t>(n));
        for (const auto& e : entries_)
            for (long long i = 0; i < e.count; ++i) out.push_back(e.order);
        return out;
    }

    /// Copy with all order-0 entries removed.
    Pattern without_marked_points() const {
        std::vector<PatternEntry> kept;
        for (const auto& e : entries_)
            if (e.order != 0) kept.push_back(e);
        return Pattern(flavor_, std::move(kept));
    }

    long long marked_point_count() const noexcept { return count_of(0); }

    /// Disjoint union of two same-flavor patterns.
    static Pattern merge(const Pattern& a, const Pattern& b) {
        if (a.flavor_ != b.flavor_) throw Error(ErrorKind::flavor, "cannot merge patterns of different flavors");
        std::vector<PatternEntry> all = a.entries_;
        all.insert(all.end(), b.entries_.begin(), b.entries_.end());
        return from_entries(a.flavor_, std::move(all));
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;

    /// Lexicographic comparison of the expanded order sequences (equal-flavor
    /// patterns); used for deterministic enumeration listings.
    static bool lex_less(const Pattern& a, const Pattern& b) {
        std::size_t ia = 0, ib = 0;
        long long ra = 0, rb = 0;  // consumed within current run
        while (ia < a.entries_.size() && ib < b.entries_.size()) {
            const auto& ea = a.entries_[ia];
            const auto& eb = b.entries_[ib];
            if (ea.order != eb.order) return ea.order < eb.order;
            long long take = std::min(ea.count - ra, eb.count - rb);
            ra += take;
            rb += take;
            if (ra == ea.count) {
                ++ia;
                ra = 0;
            }
            if (rb == eb.count) {
                ++ib;
                rb = 0;
            }
        }
        return ia == a.entries_.size() && ib < b.entries_.size();
    }

    static constexpr long long kExpandLimit = 1 << 20;

private:
    Pattern(Flavor f, std::vector<PatternEntry> entries) : flavor_(f), entries_(std::move(entries)) { validate(); }

    int128 order_sum_wide() const {
        int128 s = 0;
        for (const auto& e : entries_) s = detail::checked_add(s, detail::checked_mul(e.order, e.count));
        return s;
    }

    static std::vector<PatternEntry> collect(std::span<const long long> orders) {
        std::vector<PatternEntry> entries;
        for (long long k : orders) entries.push_back({k, 1});
        return canonicalize(std::move(entries));
    }

    static std::vector<PatternEntry> canonicalize(std::vector<PatternEntry> entries) {
        for (const auto& e : entries)
            if (e.count < 1) throw Error(ErrorKind::domain, "entry count must be >= 1");
        std::sort(entries.begin(), entries.end(),
                  [](const PatternEntry& x, const PatternEntry& y) { return x.order > y.order; });
        std::vector<PatternEntry> merged;
        for (const auto& e : entries) {
            if (!merged.empty() && merged.back().order == e.order)
                merged.back().count = detail::to_int64(detail::checked_add(merged.back().count, e.count), "entry count");
            else
                merged.push_back(e);
        }
        return merged;
    }

    void validate() const {
        for (const auto& e : entries_) {
            if (flavor_ == Flavor::Quadratic && e.order < -1)
                throw Error(ErrorKind::order,
                            "quadratic order " + std::to_string(e.order) + " below -1 (at worst simple poles)");
            if (flavor_ == Flavor::Abelian && e.order < 0)
                throw Error(ErrorKind::order, "Abelian order " + std::to_string(e.order) + " is negative");
        }
        int128 s = order_sum_wide();
        if (flavor_ == Flavor::Quadratic) {
            if (detail::mod_nonneg(s, 4) != 0)
                throw Error(ErrorKind::sum, "quadratic order sum " + detail::int128_str(s) + " is not 0 mod 4");
            if (s < -4) throw Error(ErrorKind::sum, "quadratic order sum " + detail::int128_str(s) + " is below -4");
        } else {
            if (detail::mod_nonneg(s, 2) != 0)
                throw Error(ErrorKind::sum, "Abelian order sum " + detail::int128_str(s) + " is odd");
        }
    }

    Flavor flavor_;
    std::vector<PatternEntry> entries_;
};

/// Genus from the Gauss-Bonnet sum rule: sum(k) = 4g-4 (quadratic),
/// sum(k) = 2g-2 (Abelian). Integrality is guaranteed by the invariants.
inline long long genus(const Pattern& p) {
    int128 s = 0;
    for (const auto& e : p.entries()) s = detail::checked_add(s, detail::checked_mul(e.order, e.count));
    int128 g = p.is_quadratic() ? (s + 4) / 4 : (s + 2) / 2;
    return detail::to_int64(g, "genus");
}

/// Complex dimension of the stratum: 2g+n-2 (quadratic), 2g+n-1 (Abelian);
/// marked points count toward n.
inline long long dimension(const Pattern& p) {
    int128 g = genus(p);
    int128 n = p.size();
    int128 d = detail::checked_add(detail::checked_mul(2, g), n) - (p.is_quadratic() ? 2 : 1);
    return detail::to_int64(d, "dimension");
}

// -- stratum notation ------------------------------------------------------
//
// pattern  := ("Q" | "H") "(" [ entry ("," entry)* ] ")"
// entry    := integer [ "^" positive-integer ]
//
// Whitespace is ignored everywhere. Syntax errors report a 1-based position.

namespace detail {

class PatternParser {
public:
    explicit PatternParser(std::string_view text) : text_(text) {}

    Pattern parse() {
        skip_ws();
        Flavor flavor;
        if (peek() == 'Q')
            flavor = Flavor::Quadratic;
        else if (peek() == 'H')
            flavor = Flavor::Abelian;
        else
            fail("expected 'Q' or 'H'");
        ++pos_;
        expect('(');
        std::vector<PatternEntry> entries;
        skip_ws();
        if (peek() != ')') {
            entries.push_back(entry());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                entries.push_back(entry());
                skip_ws();
            }
        }
        expect(')');
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return Pattern::from_entries(flavor, std::move(entries));
    }

private:
    PatternEntry entry() {
        long long order = integer();
        long long count = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            count = integer();
            if (count < 1) fail("exponent must be a positive integer");
        }
        return {order, count};
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        int128 value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = detail::checked_add(detail::checked_mul(value, 10), text_[pos_] - '0');
            if (value > std::numeric_limits<long long>::max()) {
                pos_ = start;
                fail("integer literal out of range");
            }
            ++pos_;
        }
        return neg ? -static_cast<long long>(value) : static_cast<long long>(value);
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw Error(ErrorKind::syntax, what, pos_ + 1); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse stratum notation, e.g. "Q(1^4,8,2,3^2)" or "H(0)". Returns the
/// canonical Pattern; errors carry distinct categories (syntax with position,
/// order violation, sum violation).
inline Pattern parse_pattern(std::string_view text) { return detail::PatternParser(text).parse(); }

/// Canonical text: orders non-increasing, repeats collapsed to exponents.
/// Round-trips through parse_pattern.
inline std::string format_pattern(const Pattern& p) {
    std::string out(p.is_quadratic() ? "Q(" : "H(");
    bool first = true;
    for (const auto& e : p.entries()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(e.order);
        if (e.count > 1) {
            out += '^';
            out += std::to_string(e.count);
        }
    }
    out += ')';
    return out;
}

}  // namespace strata
