#pragma once

#include <string>

#include "strata/pattern.hpp"

namespace strata {

/// Whether the spin structure is defined for differentials with this pattern,
/// with a human-readable reason when it is not.
struct SpinStatus {
    bool defined = true;
    std::string reason;
};

/// Quadratic: defined iff no order is 2 mod 4 (poles -1 = 3 mod 4 and marked
/// points pass). Abelian: defined iff every order is even.
inline SpinStatus spin_defined(const Pattern& p) {
    for (const auto& e : p.entries()) {
        if (p.is_quadratic()) {
            if (detail::mod_nonneg(e.order, 4) == 2)
                return {false, "order " + std::to_string(e.order) + " = 2 mod 4"};
        } else {
            if (detail::mod_nonneg(e.order, 2) != 0)
                return {false, "odd order " + std::to_string(e.order)};
        }
    }
    return {true, ""};
}

/// True when every order is even, so a differential with this pattern could
/// be the global square of a 1-form (the pattern alone cannot decide: the
/// double cover is disconnected exactly in the square case).
inline bool is_square_candidate(const Pattern& base) {
    if (!base.is_quadratic()) throw Error(ErrorKind::flavor, "square candidacy applies to quadratic patterns");
    for (const auto& e : base.entries())
        if (detail::mod_nonneg(e.order, 2) != 0) return false;
    return true;
}

/// Singularity-pattern image of the orientation double cover pi: M~ -> M,
/// with Riemann-Hurwitz bookkeeping. The cover is ramified exactly over the
/// odd-order singularities of the base (poles included).
struct CoverData {
    Pattern base;
    Pattern cover;
    long long ramification_count = 0;  // 2n = number of odd-order base singularities
    long long cover_genus = 0;         // 2g + n - 1
    long long h1_dim = 0;              // dim H_1(M~; Z_2) = 4g + 2n - 2
    bool square_candidate = false;
};

/// Pattern map of the canonical double covering:
///   odd k   -> one zero of order k+1 (ramified preimage; k = -1 lifts to a
///              regular point, dropped from the cover pattern)
///   even k>=2 -> two zeros of order k/2 (the two branches of the root)
///   k = 0   -> two regular points; dropped unless keep_marked is set.
inline CoverData cover_pattern(const Pattern& base, bool keep_marked = false) {
    if (!base.is_quadratic()) throw Error(ErrorKind::flavor, "double cover is taken over a quadratic pattern");

    std::vector<PatternEntry> cover_entries;
    int128 ramified = 0;
    for (const auto& e : base.entries()) {
        if (detail::mod_nonneg(e.order, 2) != 0) {
            ramified = detail::checked_add(ramified, e.count);
            if (e.order + 1 != 0) cover_entries.push_back({e.order + 1, e.count});
        } else if (e.order >= 2) {
            cover_entries.push_back({e.order / 2, detail::to_int64(detail::checked_mul(e.count, 2), "cover count")});
        } else if (keep_marked) {  // marked point: two preimages
            cover_entries.push_back({0, detail::to_int64(detail::checked_mul(e.count, 2), "cover count")});
        }
    }

    CoverData data{base, Pattern::from_entries(Flavor::Abelian, std::move(cover_entries)), 0, 0, 0, false};
    data.ramification_count = detail::to_int64(ramified, "ramification count");
    const long long g = genus(base);
    const long long n = data.ramification_count / 2;
    data.cover_genus = detail::to_int64(detail::checked_add(detail::checked_mul(2, g), n) - 1, "cover genus");
    data.h1_dim = detail::to_int64(detail::checked_mul(2, data.cover_genus), "h1 dimension");
    data.square_candidate = is_square_candidate(base);
    return data;
}

}  // namespace strata
