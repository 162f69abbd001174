#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "strata/gf2.hpp"
#include "strata/pattern.hpp"
#include "strata/spin.hpp"

namespace strata {

/// A quadratic form over Z_2 refining a symplectic intersection pairing:
/// Omega(c1+c2) = Omega(c1) + Omega(c2) + c1.c2. Stored as the pairing on a
/// fixed generator basis plus Omega on each generator.
struct Z2QuadraticForm {
    Gf2Mat intersection;
    Gf2Vec values;

    std::size_t rank() const noexcept { return values.size(); }

    /// Shape checks: square, matching lengths, symmetric with zero diagonal,
    /// even rank. Non-degeneracy is not required here (arf checks it).
    void validate() const {
        if (intersection.size() != values.size())
            throw Error(ErrorKind::domain, "intersection/value size mismatch");
        if (values.size() % 2 != 0) throw Error(ErrorKind::domain, "quadratic form rank must be even");
        if (!intersection.is_symmetric_zero_diagonal())
            throw Error(ErrorKind::domain, "intersection matrix must be symmetric with zero diagonal");
    }
};

/// Evaluate Omega on a cycle given as a generator-coordinate vector, by the
/// Arf relation expanded over the support:
///   Omega(sum_{i in S} e_i) = sum_{i in S} Omega(e_i) + sum_{i<j in S} e_i.e_j
inline int evaluate(const Z2QuadraticForm& form, const Gf2Vec& cycle) {
    if (cycle.size() != form.rank()) throw Error(ErrorKind::domain, "cycle length mismatch");
    int acc = 0;
    Gf2Vec upper = cycle;  // support with indices <= i cleared as we sweep
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!cycle.get(i)) continue;
        acc ^= form.values.get(i);
        upper.set(i, false);
        acc ^= form.intersection.row(i).dot(upper);
    }
    return acc;
}

/// A symplectic basis (a_1,b_1,...,a_m,b_m) expressed in generator
/// coordinates: a_i.b_i = 1 and all other pairings vanish.
struct SymplecticBasis {
    std::vector<Gf2Vec> a;
    std::vector<Gf2Vec> b;

    std::size_t pairs() const noexcept { return a.size(); }
};

/// Symplectic Gram-Schmidt over GF(2). Pivoting is deterministic: take the
/// lowest-index remaining generator as a_i, pair it with the first remaining
/// generator it meets, then clear the pair from everything left.
inline SymplecticBasis symplectic_basis(const Gf2Mat& intersection) {
    const std::size_t n = intersection.size();
    if (n % 2 != 0) throw Error(ErrorKind::degenerate, "odd-rank pairing is degenerate");
    if (!intersection.is_symmetric_zero_diagonal())
        throw Error(ErrorKind::domain, "intersection matrix must be symmetric with zero diagonal");

    std::vector<Gf2Vec> pool;
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pool.push_back(Gf2Vec::unit(n, i));

    SymplecticBasis basis;
    while (!pool.empty()) {
        Gf2Vec a = pool.front();
        pool.erase(pool.begin());
        std::size_t mate = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (intersection.bilinear(a, pool[i]) == 1) {
                mate = i;
                break;
            }
        }
        if (mate == pool.size()) throw Error(ErrorKind::degenerate, "intersection matrix is degenerate");
        Gf2Vec b = pool[mate];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(mate));
        for (auto& v : pool) {
            if (intersection.bilinear(v, b)) v ^= a;
            if (intersection.bilinear(v, a)) v ^= b;
        }
        basis.a.push_back(std::move(a));
        basis.b.push_back(std::move(b));
    }
    return basis;
}

/// Arf invariant: sum Omega(a_i) Omega(b_i) mod 2 over a symplectic basis;
/// independent of the basis choice. Rank 0 yields 0.
inline int arf(const Z2QuadraticForm& form) {
    form.validate();
    const SymplecticBasis basis = symplectic_basis(form.intersection);
    int acc = 0;
    for (std::size_t i = 0; i < basis.pairs(); ++i)
        acc ^= evaluate(form, basis.a[i]) & evaluate(form, basis.b[i]);
    return acc;
}

/// The chain-of-cycles form of a list of 2n odd orders (n >= 2): cycles
/// c_1,...,c_{2n-2} joining consecutive singularities, with the tridiagonal
/// pairing c_j.c_{j+1} = 1 and Omega(c_j) = (k_j + k_{j+1})/2 mod 2.
inline Z2QuadraticForm chain_form(std::span<const long long> odd_orders) {
    if (odd_orders.size() % 2 != 0 || odd_orders.size() < 4)
        throw Error(ErrorKind::domain, "chain form needs an even list of at least 4 odd orders");
    for (long long k : odd_orders)
        if (detail::mod_nonneg(k, 2) == 0)
            throw Error(ErrorKind::domain, "entry " + std::to_string(k) + " is even");

    const std::size_t rank = odd_orders.size() - 2;
    Z2QuadraticForm form{Gf2Mat(rank), Gf2Vec(rank)};
    for (std::size_t j = 0; j + 1 < rank; ++j) {
        form.intersection.set(j, j + 1, true);
        form.intersection.set(j + 1, j, true);
    }
    for (std::size_t j = 0; j < rank; ++j) {
        const int128 half = (static_cast<int128>(odd_orders[j]) + odd_orders[j + 1]) / 2;
        form.values.set(j, detail::mod_nonneg(half, 2) == 1);
    }
    return form;
}

/// Turning number of a small loop around a zero of order k >= 0 of an
/// Abelian differential: k + 1. (Omega of that loop is k mod 2.)
inline long long loop_index(long long k) {
    if (k < 0) throw Error(ErrorKind::domain, "loop index is defined for orders k >= 0");
    return k + 1;
}

/// Counts of quadratic forms on the standard rank-2g symplectic space by Arf
/// value, by brute force over all 2^(2g) value assignments.
struct ArfCounts {
    unsigned long long arf0 = 0;
    unsigned long long arf1 = 0;
};

inline ArfCounts count_arf(int g, int max_genus = 6) {
    if (g < 1) throw Error(ErrorKind::domain, "genus must be >= 1");
    if (g > max_genus)
        throw Error(ErrorKind::domain,
                    "genus " + std::to_string(g) + " exceeds the enumeration bound " + std::to_string(max_genus));
    const std::size_t rank = 2 * static_cast<std::size_t>(g);
    Z2QuadraticForm form{Gf2Mat::standard_symplectic(rank), Gf2Vec(rank)};
    const SymplecticBasis basis = symplectic_basis(form.intersection);
    ArfCounts counts;
    for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << rank); ++assignment) {
        for (std::size_t i = 0; i < rank; ++i) form.values.set(i, (assignment >> i) & 1);
        int acc = 0;
        for (std::size_t i = 0; i < basis.pairs(); ++i)
            acc ^= evaluate(form, basis.a[i]) & evaluate(form, basis.b[i]);
        (acc ? counts.arf1 : counts.arf0) += 1;
    }
    return counts;
}

/// Third, independent spin-parity route: Arf invariant of the chain form of
/// the pattern's odd orders (fewer than 4 odd orders leave no chain cycles,
/// hence parity even).
inline SpinParity spin_parity_arf(const Pattern& p) {
    if (!p.is_quadratic()) throw Error(ErrorKind::flavor, "Arf spin route applies to quadratic patterns");
    if (auto s = spin_defined(p); !s.defined) return SpinParity::undefined(s.reason);
    const std::vector<long long> odd = odd_orders(p);
    if (odd.size() < 4) return SpinParity::even();
    return SpinParity::from_bit(arf(chain_form(odd)));
}

/// Change of basis by the symplectic transvection T_w: v -> v + (v.w) w.
/// The pairing matrix is recomputed (it is preserved; tests assert this) and
/// Omega is transported through evaluate.
inline Z2QuadraticForm apply_transvection(const Z2QuadraticForm& form, const Gf2Vec& w) {
    if (w.size() != form.rank()) throw Error(ErrorKind::domain, "transvection vector length mismatch");
    if (w.is_zero()) throw Error(ErrorKind::domain, "transvection by the zero vector");
    const std::size_t n = form.rank();
    std::vector<Gf2Vec> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Gf2Vec v = Gf2Vec::unit(n, i);
        if (form.intersection.bilinear(v, w)) v ^= w;
        images.push_back(std::move(v));
    }
    Z2QuadraticForm out{Gf2Mat(n), Gf2Vec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        out.values.set(i, evaluate(form, images[i]));
        for (std::size_t j = 0; j < n; ++j)
            out.intersection.set(i, j, form.intersection.bilinear(images[i], images[j]));
    }
    return out;
}

}  // namespace strata
