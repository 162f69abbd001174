#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strata/double_cover.hpp"
#include "strata/pattern.hpp"
#include "strata/rational.hpp"
#include "strata/spin.hpp"

namespace strata {

/// A rational polygonal billiard given by its angle data: angle i equals
/// (m_i/n_i) * pi, stored reduced with m_i >= 1, n_i >= 1. Geometric
/// realizability is not checked beyond the polygon angle sum
/// sum(m_i/n_i) = k - 2, which `relax_polygon` disables for abstract
/// angle systems.
struct BilliardTable {
    std::vector<Rational> angles;
    bool relax_polygon = false;

    static BilliardTable from_angles(std::vector<Rational> angles, bool relax = false) {
        BilliardTable t{std::move(angles), relax};
        t.validate();
        return t;
    }

    /// Parse a comma-separated angle list, e.g. "11/14,1/7,1/14"; a bare
    /// integer m abbreviates m/1.
    static BilliardTable parse(std::string_view text, bool relax = false) {
        std::vector<Rational> angles;
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        auto integer = [&]() -> long long {
            skip_ws();
            std::size_t start = pos;
            if (pos < text.size() && text[pos] == '-') ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start || (text[start] == '-' && pos == start + 1))
                throw Error(ErrorKind::syntax, "expected an integer", pos + 1);
            try {
                return std::stoll(std::string(text.substr(start, pos - start)));
            } catch (const std::out_of_range&) {
                throw Error(ErrorKind::overflow, "angle coefficient out of 64-bit range", start + 1);
            }
        };
        while (true) {
            long long num = integer();
            long long den = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                den = integer();
            }
            if (den == 0) throw Error(ErrorKind::domain, "angle denominator must be nonzero");
            angles.emplace_back(num, den);
            skip_ws();
            if (pos == text.size()) break;
            if (text[pos] != ',') throw Error(ErrorKind::syntax, "expected ','", pos + 1);
            ++pos;
        }
        return from_angles(std::move(angles), relax);
    }

    void validate() const {
        for (const auto& a : angles)
            if (a.num() < 1) throw Error(ErrorKind::domain, "angle coefficients must be positive");
        if (!relax_polygon) {
            if (angles.size() < 3) throw Error(ErrorKind::domain, "a polygon needs at least 3 angles");
            Rational sum(0);
            for (const auto& a : angles) sum = sum + a;
            if (sum != Rational(static_cast<int128>(angles.size()) - 2))
                throw Error(ErrorKind::domain, "angle sum " + sum.str() + " differs from k-2 = " +
                                                   std::to_string(angles.size() - 2) +
                                                   " (use relax to accept abstract angle systems)");
        }
    }

    long long m(std::size_t i) const { return angles[i].num64(); }
    long long n(std::size_t i) const { return angles[i].den64(); }
};

/// Everything the unfolding/classification pipeline derives from a table.
struct UnfoldingReport {
    long long N = 0;      // lcm of the n_i
    long long genus = 0;  // genus of the unfolded translation surface
    Pattern abelian_pattern = Pattern::empty(Flavor::Abelian);  // fake zeros stripped
    long long fake_zero_count = 0;
    Pattern quadratic_pattern = Pattern::empty(Flavor::Quadratic);  // marked points stripped
    long long Q = 0;                 // lcm of the q_i
    bool is_abelian_square = false;  // N odd
    SpinParity spin = SpinParity::undefined("not computed");
    std::string component_label;  // empty when the parity is undefined
    SpinParity hyperelliptic_parity = SpinParity::undefined("not applicable");
    std::string hyperelliptic_verdict = "not applicable";
    bool routes_agree = true;  // Corollary route vs closed form on the pillowcase pattern
    bool cover_consistent = true;  // double cover of pillowcase pattern vs unfolding pattern (N even)
};

/// Unfolding invariants: N = lcm(n_i), the genus
///   g = 1 + (N/2) (k - 2 - sum 1/n_i)
/// (exact rational arithmetic; integrality asserted), and the singularity
/// pattern: each vertex induces N/n_i zeros of order m_i - 1. Zeros of order
/// 0 are fake: counted, never included in the pattern.
inline UnfoldingReport unfold(const BilliardTable& table) {
    table.validate();
    UnfoldingReport report;
    long long N = 1;
    for (std::size_t i = 0; i < table.angles.size(); ++i) N = lcm64(N, table.n(i));
    report.N = N;

    Rational inv_sum(0);
    for (std::size_t i = 0; i < table.angles.size(); ++i) inv_sum = inv_sum + Rational(1, table.n(i));
    const Rational g = Rational(1) +
                       Rational(N, 2) * (Rational(static_cast<int128>(table.angles.size()) - 2) - inv_sum);
    if (!g.is_integer()) throw Error(ErrorKind::domain, "non-integral genus " + g.str() + ": invalid angle system");
    report.genus = g.num64();
    if (report.genus < 0) throw Error(ErrorKind::domain, "negative genus: invalid angle system");

    std::vector<PatternEntry> zeros;
    int128 fakes = 0;
    for (std::size_t i = 0; i < table.angles.size(); ++i) {
        const long long copies = N / table.n(i);
        const long long order = table.m(i) - 1;
        if (order == 0)
            fakes = detail::checked_add(fakes, copies);
        else
            zeros.push_back({order, copies});
    }
    report.fake_zero_count = detail::to_int64(fakes, "fake zero count");
    report.abelian_pattern = Pattern::from_entries(Flavor::Abelian, std::move(zeros));
    report.is_abelian_square = (N % 2 != 0);
    return report;
}

struct PillowcaseResult {
    Pattern pattern = Pattern::empty(Flavor::Quadratic);
    long long Q = 0;
    bool is_abelian_square = false;
};

/// Pillowcase construction: write each angle as (p_i/q_i) * (pi/2) in lowest
/// terms; the doubled polygon carries a quadratic differential with Q/q_i
/// singularities of order p_i - 2 per vertex (Q = lcm of the q_i), marked
/// points stripped. It is the square of an Abelian differential iff N is odd.
inline PillowcaseResult pillowcase(const BilliardTable& table) {
    table.validate();
    PillowcaseResult result;
    long long N = 1, Q = 1;
    std::vector<Rational> halves;
    for (std::size_t i = 0; i < table.angles.size(); ++i) {
        N = lcm64(N, table.n(i));
        halves.emplace_back(2 * static_cast<int128>(table.m(i)), table.n(i));
        Q = lcm64(Q, halves.back().den64());
    }
    std::vector<PatternEntry> entries;
    for (const auto& h : halves) {
        const long long order = h.num64() - 2;
        if (order == 0) continue;  // marked point
        entries.push_back({order, Q / h.den64()});
    }
    result.pattern = Pattern::from_entries(Flavor::Quadratic, std::move(entries));
    result.Q = Q;
    result.is_abelian_square = (N % 2 != 0);
    return result;
}

/// Spin parity of the unfolded Abelian differential, directly from the angle
/// data. Requires every m_i odd (write m_i = 2k_i + 1); with
///   r1 = { i : n_i even, k_i even },  r2 = { i : n_i even, k_i odd },
///   S  = | sum_{r1} 1/n_i - sum_{r2} 1/n_i |,
/// the parity is [ N*S/4 ] mod 2 (exact rational floor).
inline SpinParity billiard_spin(const BilliardTable& table) {
    table.validate();
    long long N = 1;
    for (std::size_t i = 0; i < table.angles.size(); ++i) N = lcm64(N, table.n(i));
    Rational r1(0), r2(0);
    for (std::size_t i = 0; i < table.angles.size(); ++i) {
        const long long m = table.m(i);
        if (m % 2 == 0)
            return SpinParity::undefined("angle " + table.angles[i].str() +
                                         " pi has an even numerator: spin structure undefined");
        if (table.n(i) % 2 != 0) continue;
        const long long k = (m - 1) / 2;
        if (k % 2 == 0)
            r1 = r1 + Rational(1, table.n(i));
        else
            r2 = r2 + Rational(1, table.n(i));
    }
    const Rational S = (r1 - r2).abs();
    const int128 phi = (Rational(N) * S / Rational(4)).floor();
    return SpinParity::from_bit(detail::mod_nonneg(phi, 2));
}

/// Full pipeline: unfolding data, pillowcase pattern, spin parity with an
/// independent cross-check through the closed form, hyperelliptic-component
/// comparison when the unfolding pattern has the single- or double-zero
/// shape, and the component label.
inline UnfoldingReport classify(const BilliardTable& table) {
    UnfoldingReport report = unfold(table);
    const PillowcaseResult pc = pillowcase(table);
    report.quadratic_pattern = pc.pattern;
    report.Q = pc.Q;
    report.spin = billiard_spin(table);
    report.routes_agree = (report.spin == spin_parity_closed(pc.pattern));

    if (report.N % 2 == 0)
        report.cover_consistent =
            (cover_pattern(pc.pattern).cover.without_marked_points() == report.abelian_pattern);

    const long long g = report.genus;
    if (report.spin.defined() && g >= 2) {
        const Pattern& ab = report.abelian_pattern;
        SpinParity hyp = SpinParity::undefined("not applicable");
        if (ab == Pattern::abelian({2 * g - 2}))
            hyp = hyperelliptic_parity_single(g);
        else if (g % 2 == 1 && ab == Pattern::from_entries(Flavor::Abelian, {{g - 1, 2}}))
            hyp = hyperelliptic_parity_double(g);
        if (hyp.defined()) {
            report.hyperelliptic_parity = hyp;
            report.hyperelliptic_verdict = (hyp == report.spin) ? "hyperelliptic possible" : "not hyperelliptic";
        }
    }
    if (report.spin.defined()) report.component_label = component_label(report.abelian_pattern, report.spin);
    return report;
}

}  // namespace strata
