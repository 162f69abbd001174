#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "strata/error.hpp"

namespace strata {

/// Bit-packed vector over GF(2).
class Gf2Vec {
public:
    Gf2Vec() = default;
    explicit Gf2Vec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Gf2Vec unit(std::size_t size, std::size_t index) {
        Gf2Vec v(size);
        v.set(index, true);
        return v;
    }

    std::size_t size() const noexcept { return size_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool bit) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (bit)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    Gf2Vec& operator^=(const Gf2Vec& o) {
        if (o.size_ != size_) throw Error(ErrorKind::domain, "GF(2) vector length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend Gf2Vec operator^(Gf2Vec a, const Gf2Vec& b) {
        a ^= b;
        return a;
    }

    /// Parity of the bitwise AND with `o` (the standard GF(2) dot product).
    int dot(const Gf2Vec& o) const {
        if (o.size_ != size_) throw Error(ErrorKind::domain, "GF(2) vector length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1;
    }

    bool is_zero() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int popcount() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    friend bool operator==(const Gf2Vec&, const Gf2Vec&) = default;

    std::string str() const {
        std::string s;
        s.reserve(size_);
        for (std::size_t i = 0; i < size_; ++i) s += get(i) ? '1' : '0';
        return s;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= size_) throw Error(ErrorKind::domain, "GF(2) vector index out of range");
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense square matrix over GF(2), stored as bit-packed rows.
class Gf2Mat {
public:
    Gf2Mat() = default;
    explicit Gf2Mat(std::size_t n) : n_(n), rows_(n, Gf2Vec(n)) {}

    static Gf2Mat identity(std::size_t n) {
        Gf2Mat m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    /// Standard symplectic pairing matrix on pairs (e_0,e_1), (e_2,e_3), ...
    static Gf2Mat standard_symplectic(std::size_t n) {
        if (n % 2 != 0) throw Error(ErrorKind::domain, "symplectic matrix needs even size");
        Gf2Mat m(n);
        for (std::size_t i = 0; i + 1 < n; i += 2) {
            m.set(i, i + 1, true);
            m.set(i + 1, i, true);
        }
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool bit) { rows_.at(r).set(c, bit); }

    const Gf2Vec& row(std::size_t r) const { return rows_.at(r); }

    Gf2Vec mul(const Gf2Vec& v) const {
        if (v.size() != n_) throw Error(ErrorKind::domain, "GF(2) matrix/vector size mismatch");
        Gf2Vec out(n_);
        for (std::size_t r = 0; r < n_; ++r) out.set(r, rows_[r].dot(v));
        return out;
    }

    /// u^T M v over GF(2).
    int bilinear(const Gf2Vec& u, const Gf2Vec& v) const { return u.dot(mul(v)); }

    bool is_symmetric_zero_diagonal() const {
        for (std::size_t r = 0; r < n_; ++r) {
            if (rows_[r].get(r)) return false;
            for (std::size_t c = r + 1; c < n_; ++c)
                if (rows_[r].get(c) != rows_[c].get(r)) return false;
        }
        return true;
    }

    std::size_t rank() const {
        std::vector<Gf2Vec> rows = rows_;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n_ && rank < rows.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
            ++rank;
        }
        return rank;
    }

    bool nonsingular() const { return rank() == n_; }

    friend bool operator==(const Gf2Mat&, const Gf2Mat&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Gf2Vec> rows_;
};

}  // namespace strata
