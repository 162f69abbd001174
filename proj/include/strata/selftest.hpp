#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "strata/arf.hpp"
#include "strata/billiard.hpp"
#include "strata/double_cover.hpp"
#include "strata/enumerate.hpp"
#include "strata/spin.hpp"
#include "strata/stratum.hpp"

namespace strata::selftest {

/// One cross-checking criterion of the verification corpus: an exact check
/// plus a wall-clock budget.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double elapsed_ms = 0.0;
    double limit_ms = 0.0;
    std::string detail;
};

namespace detail {

class Runner {
public:
    Runner(int id, std::string name, double limit_ms) : result_{id, std::move(name), true, 0.0, limit_ms, ""} {
        start_ = std::chrono::steady_clock::now();
    }

    void require(bool ok, const std::string& what) {
        if (!ok) {
            result_.pass = false;
            if (!result_.detail.empty()) result_.detail += "; ";
            result_.detail += what;
        }
    }

    void note(const std::string& text) {
        if (result_.pass && result_.detail.empty()) result_.detail = text;
    }

    CriterionResult finish() {
        result_.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        if (result_.elapsed_ms > result_.limit_ms) {
            result_.pass = false;
            result_.detail += (result_.detail.empty() ? "" : "; ");
            result_.detail += "exceeded time budget";
        }
        return result_;
    }

private:
    CriterionResult result_;
    std::chrono::steady_clock::time_point start_;
};

/// Multisets of a given size drawn from `values` (ascending), visited in
/// non-decreasing index order.
inline void for_each_multiset(const std::vector<long long>& values, std::size_t size,
                              const std::function<void(const std::vector<long long>&)>& visit) {
    std::vector<long long> current;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (current.size() == size) {
            visit(current);
            return;
        }
        for (std::size_t i = from; i < values.size(); ++i) {
            current.push_back(values[i]);
            rec(i);
            current.pop_back();
        }
    };
    rec(0);
}

/// Random non-degenerate Z_2 quadratic form of the given even rank: the
/// standard symplectic pairing pushed through a random invertible basis
/// change, with random generator values.
inline Z2QuadraticForm random_form(std::mt19937_64& rng, std::size_t rank) {
    const Gf2Mat J = Gf2Mat::standard_symplectic(rank);
    Gf2Mat change(rank);
    do {
        for (std::size_t r = 0; r < rank; ++r)
            for (std::size_t c = 0; c < rank; ++c) change.set(r, c, rng() & 1);
    } while (!change.nonsingular());
    Z2QuadraticForm form{Gf2Mat(rank), Gf2Vec(rank)};
    for (std::size_t r = 0; r < rank; ++r) {
        form.values.set(r, rng() & 1);
        for (std::size_t c = 0; c < rank; ++c) form.intersection.set(r, c, J.bilinear(change.row(r), change.row(c)));
    }
    return form;
}

inline Gf2Vec random_nonzero_vec(std::mt19937_64& rng, std::size_t size) {
    Gf2Vec v(size);
    do {
        for (std::size_t i = 0; i < size; ++i) v.set(i, rng() & 1);
    } while (v.is_zero());
    return v;
}

/// Random rational polygon with every angle an odd multiple of pi/n_i,
/// n_i <= 60, 3..12 vertices, angle sum exactly k-2. Angles share a sampled
/// common denominator so the forced last angle stays representable; samples
/// that fail the oddness or denominator constraints are redrawn.
inline BilliardTable random_billiard(std::mt19937_64& rng) {
    auto uniform = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    for (;;) {
        long long denom = uniform(1, 60);
        if (uniform(0, 1)) denom = lcm64(denom, uniform(1, 60));  // sometimes push N above 60
        std::vector<long long> divisors;
        for (long long d = 1; d <= std::min<long long>(denom, 60); ++d)
            if (denom % d == 0) divisors.push_back(d);

        const long long k = uniform(3, 12);
        const long long total_units = (k - 2) * denom;  // budget in units of pi/denom
        long long used = 0;
        std::vector<Rational> angles;
        bool ok = true;
        for (long long i = 0; i + 1 < k && ok; ++i) {
            const long long n = divisors[static_cast<std::size_t>(uniform(0, static_cast<long long>(divisors.size()) - 1))];
            const long long unit = denom / n;                 // one step of 1/n in units
            const long long reserve = k - 2 - i;              // later angles need >= 1 unit each
            const long long m_hi = (total_units - used - reserve) / unit;
            if (m_hi < 1) {
                ok = false;
                break;
            }
            const long long m = 2 * uniform(0, (m_hi - 1) / 2) + 1;
            angles.emplace_back(m, n);
            used += m * unit;
        }
        if (!ok) continue;
        const Rational last(total_units - used, denom);
        if (last.num() < 1 || last.num() % 2 == 0 || last.den() > 60) continue;
        angles.push_back(last);
        return BilliardTable::from_angles(std::move(angles));
    }
}

}  // namespace detail

/// 1: the two multi-component strata Q(12) and Q(-1,9) both carry even spin.
inline CriterionResult criterion_1() {
    detail::Runner r(1, "closed form on Q(12) and Q(-1,9) is even", 1.0);
    r.require(spin_parity_closed(Pattern::quadratic({12})) == SpinParity::even(), "Q(12) not even");
    r.require(spin_parity_closed(Pattern::quadratic({9, -1})) == SpinParity::even(), "Q(-1,9) not even");
    return r.finish();
}

/// 2: the sum form is order-invariant: exhaustive over multisets of odd
/// orders from {-1,1,3,5,7,9} with 4, 6, or 8 entries and sum = 0 mod 4,
/// all permutations.
inline CriterionResult criterion_2() {
    detail::Runner r(2, "sum form is invariant under all permutations", 30000.0);
    const std::vector<long long> values = {-1, 1, 3, 5, 7, 9};
    long long multisets = 0, permutations = 0;
    for (std::size_t size : {4u, 6u, 8u}) {
        detail::for_each_multiset(values, size, [&](const std::vector<long long>& multiset) {
            long long sum = 0;
            for (long long v : multiset) sum += v;
            if (strata::detail::mod_nonneg(sum, 4) != 0) return;
            ++multisets;
            std::vector<long long> perm = multiset;  // ascending = first permutation
            const SpinParity reference = spin_parity_sum(perm);
            do {
                ++permutations;
                if (!(spin_parity_sum(perm) == reference)) {
                    std::string list;
                    for (long long v : perm) list += std::to_string(v) + " ";
                    r.require(false, "permutation changed the parity: " + list);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    }
    r.note(std::to_string(multisets) + " multisets, " + std::to_string(permutations) + " permutations");
    return r.finish();
}

/// 3: closed form, sum form and Arf route agree on every valid spin-defined
/// quadratic pattern with sum <= 24 and entries in
/// {-1,0,1,3,4,5,7,8,9,11,12} (up to 12 poles and 2 marked points).
inline CriterionResult criterion_3() {
    detail::Runner r(3, "triple-route agreement on the sum<=24 corpus", 60000.0);
    EnumerationOptions opt;
    opt.max_sum = 24;
    opt.max_poles = 12;
    opt.max_marked = 2;
    opt.alphabet = {1, 3, 4, 5, 7, 8, 9, 11, 12};
    const auto patterns = enumerate_quadratic(opt);
    long long checked = 0;
    for (const auto& p : patterns) {
        if (!spin_defined(p).defined) continue;  // alphabet excludes 2 mod 4, but marked points are cheap to re-check
        const SpinParity closed = spin_parity_closed(p);
        const SpinParity sum = spin_parity_sum(odd_orders(p));
        const SpinParity via_arf = spin_parity_arf(p);
        ++checked;
        if (!(closed == sum && sum == via_arf))
            r.require(false, "routes disagree on " + format_pattern(p) + ": closed=" + closed.str() +
                                 " sum=" + sum.str() + " arf=" + via_arf.str());
    }
    r.require(checked > 1000, "corpus unexpectedly small");
    r.note(std::to_string(checked) + " patterns");
    return r.finish();
}

/// 4: brute-force Arf counts over all forms on the standard rank-2g space.
inline CriterionResult criterion_4() {
    detail::Runner r(4, "Arf counts are 2^(g-1)(2^g+1) / 2^(g-1)(2^g-1)", 10000.0);
    const std::pair<unsigned long long, unsigned long long> expected[] = {{3, 1}, {10, 6}, {36, 28}, {136, 120}};
    for (int g = 1; g <= 4; ++g) {
        const ArfCounts counts = count_arf(g);
        r.require(counts.arf0 == expected[g - 1].first && counts.arf1 == expected[g - 1].second,
                  "g=" + std::to_string(g) + " gave (" + std::to_string(counts.arf0) + "," +
                      std::to_string(counts.arf1) + ")");
    }
    return r.finish();
}

/// 5: Arf is invariant under symplectic transvections: 100-step random
/// sequences on 50 random non-degenerate forms of rank <= 8.
inline CriterionResult criterion_5() {
    detail::Runner r(5, "Arf invariance under random transvections", 5000.0);
    std::mt19937_64 rng(0x5u);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rank = 2 * (1 + static_cast<std::size_t>(rng() % 4));  // 2,4,6,8
        Z2QuadraticForm form = detail::random_form(rng, rank);
        const int reference = arf(form);
        for (int step = 0; step < 100; ++step) {
            const Gf2Vec w = detail::random_nonzero_vec(rng, rank);
            const Z2QuadraticForm next = apply_transvection(form, w);
            if (!(next.intersection == form.intersection)) {
                r.require(false, "transvection changed the pairing (trial " + std::to_string(trial) + ")");
                break;
            }
            form = next;
        }
        r.require(arf(form) == reference, "Arf changed (trial " + std::to_string(trial) + ")");
    }
    return r.finish();
}

/// 6: among all valid quadratic patterns with sum <= 8 (<=4 poles), exactly
/// Q(), Q(1,-1), Q(4), Q(1,3) are empty.
inline CriterionResult criterion_6() {
    detail::Runner r(6, "Masur-Smillie exceptions via exhaustive enumeration", 1000.0);
    EnumerationOptions opt;
    opt.max_sum = 8;
    const auto patterns = enumerate_quadratic(opt);
    std::vector<std::string> empties;
    for (const auto& p : patterns)
        if (!is_nonempty(p)) empties.push_back(format_pattern(p));
    const std::vector<std::string> expected = {"Q()", "Q(1,-1)", "Q(3,1)", "Q(4)"};
    std::vector<std::string> sorted = empties;
    std::sort(sorted.begin(), sorted.end());
    r.require(sorted == expected, "empty set mismatch (" + std::to_string(empties.size()) + " flagged)");
    r.note(std::to_string(patterns.size()) + " patterns enumerated");
    return r.finish();
}

/// 7: the (11/14, 1/7, 1/14) triangle: N=14, genus 6, H(10), Q(9,-1), even
/// spin, odd hyperelliptic parity, hence not hyperelliptic. The unfolding
/// has 3 fake zeros (one per vertex copy with m_i = 1).
inline CriterionResult criterion_7() {
    detail::Runner r(7, "triangle (11/14, 1/7, 1/14) classification", 1.0);
    const UnfoldingReport rep = classify(BilliardTable::parse("11/14,1/7,1/14"));
    r.require(rep.N == 14, "N != 14");
    r.require(rep.genus == 6, "genus != 6");
    r.require(rep.abelian_pattern == Pattern::abelian({10}), "pattern != H(10)");
    r.require(rep.fake_zero_count == 3, "fake zeros != 3");
    r.require(rep.quadratic_pattern == Pattern::quadratic({9, -1}), "pattern != Q(9,-1)");
    r.require(rep.spin == SpinParity::even(), "spin not even");
    r.require(rep.hyperelliptic_parity == SpinParity::odd(), "hyperelliptic parity not odd");
    r.require(rep.hyperelliptic_verdict == "not hyperelliptic", "verdict mismatch");
    r.require(rep.component_label == "H^even(10)", "label mismatch");
    r.require(rep.routes_agree && rep.cover_consistent, "cross-route check failed");
    return r.finish();
}

/// 8: the angle-data parity formula agrees with the closed form applied to
/// the pillowcase pattern on 1000 seeded random polygons.
inline CriterionResult criterion_8() {
    detail::Runner r(8, "billiard formula vs closed form on 1000 random polygons", 10000.0);
    std::mt19937_64 rng(0xB111A8Du);
    for (int i = 0; i < 1000; ++i) {
        const BilliardTable table = detail::random_billiard(rng);
        const SpinParity direct = billiard_spin(table);
        const SpinParity via_pattern = spin_parity_closed(pillowcase(table).pattern);
        if (!direct.defined() || !(direct == via_pattern)) {
            std::string angles;
            for (const auto& a : table.angles) angles += a.str() + " ";
            r.require(false, "disagreement on angles " + angles);
        }
    }
    return r.finish();
}

/// 9: Riemann-Hurwitz consistency of the double cover on every valid
/// quadratic pattern with sum <= 40 (<=8 poles): Gauss-Bonnet genus of the
/// cover pattern equals 2g+n-1 and dim H_1 = 4g+2n-2.
inline CriterionResult criterion_9() {
    detail::Runner r(9, "double-cover genus and H_1 dimension, sum<=40 corpus", 30000.0);
    EnumerationOptions opt;
    opt.max_sum = 40;
    opt.max_poles = 8;
    const auto patterns = enumerate_quadratic(opt);
    for (const auto& p : patterns) {
        const CoverData data = cover_pattern(p);
        const long long g = genus(p);
        const long long n = data.ramification_count / 2;
        bool ok = data.cover_genus == 2 * g + n - 1;
        ok = ok && genus(data.cover) == data.cover_genus;
        ok = ok && data.h1_dim == 4 * g + 2 * n - 2;
        if (spin_defined(p).defined)
            for (const auto& e : data.cover.entries()) ok = ok && e.order % 2 == 0;
        if (!ok) r.require(false, "cover bookkeeping wrong for " + format_pattern(p));
    }
    r.note(std::to_string(patterns.size()) + " patterns");
    return r.finish();
}

/// 10: hyperelliptic parity tables from the two component formulas,
/// [ (g+1)/2 ] mod 2 and (g+1)/2 mod 2 (g odd). For odd g the two formulas
/// coincide, and the g=6 value is pinned by the known odd parity of the
/// hyperelliptic component of H(10).
inline CriterionResult criterion_10() {
    detail::Runner r(10, "hyperelliptic component parity tables", 1.0);
    const std::pair<long long, SpinParity> single_table[] = {
        {2, SpinParity::odd()},  {3, SpinParity::even()}, {4, SpinParity::even()},
        {5, SpinParity::odd()},  {6, SpinParity::odd()},  {7, SpinParity::even()},
    };
    for (const auto& [g, expected] : single_table)
        r.require(hyperelliptic_parity_single(g) == expected,
                  "single-zero formula at g=" + std::to_string(g) + " is not " + expected.str());
    r.require(hyperelliptic_parity_double(3) == SpinParity::even(), "double-zero formula at g=3 is not even");
    r.require(hyperelliptic_parity_double(5) == SpinParity::odd(), "double-zero formula at g=5 is not odd");
    for (long long g : {3LL, 5LL, 7LL})
        r.require(hyperelliptic_parity_single(g) == hyperelliptic_parity_double(g),
                  "the two formulas disagree at odd g=" + std::to_string(g));
    return r.finish();
}

inline std::vector<CriterionResult> run_all() {
    return {criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(),
            criterion_6(), criterion_7(), criterion_8(), criterion_9(), criterion_10()};
}

}  // namespace strata::selftest
