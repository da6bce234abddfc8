#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperell/errors.hpp"
#include "hyperell/rational.hpp"

namespace hyperell {

/// Dense row-major matrix over an arbitrary coefficient type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw error("Matrix: entry count does not match shape");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    const std::vector<T>& entries() const { return data_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

namespace detail {

// Clears denominators row by row; row scaling does not change rank, and the
// determinant is corrected by the product of the multipliers.
inline Matrix<Integer> integer_rows(const RationalMatrix& m, Rational* scale = nullptr) {
    Matrix<Integer> out(m.rows(), m.cols());
    Rational total(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (const auto& x : m.row(r)) l = lcm(l, x.denominator());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& x = m(r, c);
            out(r, c) = x.numerator() * (l / x.denominator());
        }
        total *= Rational(l);
    }
    if (scale) *scale = total;
    return out;
}

// Fraction-free (Bareiss) forward elimination in place. Returns the rank and
// the number of row swaps performed.
inline std::pair<std::size_t, std::size_t> bareiss_eliminate(Matrix<Integer>& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    Integer prev = 1;
    std::size_t r = 0, swaps = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            a.swap_rows(p, r);
            ++swaps;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return {r, swaps};
}

} // namespace detail

/// Rank over Q by fraction-free elimination. Exact.
inline std::size_t rank_exact(const RationalMatrix& m) {
    auto a = detail::integer_rows(m);
    return detail::bareiss_eliminate(a).first;
}

inline Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw error("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    Rational scale;
    auto a = detail::integer_rows(m, &scale);
    auto [rank, swaps] = detail::bareiss_eliminate(a);
    if (rank < n) return Rational(0);
    Rational det(a(n - 1, n - 1));
    if (swaps % 2) det = -det;
    return det / scale;
}

/// Determinant over a commutative ring with no division available
/// (e.g. polynomials). Laplace expansion memoized on column subsets, so only
/// usable for small matrices (n <= ~20).
template <class Ring>
Ring determinant_cofactor(const Matrix<Ring>& m) {
    if (m.rows() != m.cols()) throw error("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) throw error("determinant_cofactor: empty matrix");
    if (n > 24) throw error("determinant_cofactor: matrix too large");
    // minor(row, cols) = det of rows [row, n) restricted to the column mask.
    std::unordered_map<std::uint32_t, Ring> memo;
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t mask) -> Ring {
        if (row == n - 1) {
            for (std::size_t c = 0; c < n; ++c)
                if (mask & (1u << c)) return m(row, c);
        }
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        Ring acc{};
        bool negate = false;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const Ring& entry = m(row, c);
            if (!(entry == Ring{})) {
                Ring term = entry * self(self, row + 1, mask & ~(1u << c));
                acc = negate ? acc - term : acc + term;
            }
            negate = !negate;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, 0, (n == 32 ? 0xffffffffu : ((1u << n) - 1)));
}

/// Sylvester matrix of f and h, given as coefficient sequences in ascending
/// powers (index i holds the coefficient of x^i).
template <class T>
Matrix<T> sylvester_matrix(std::span<const T> f, std::span<const T> h) {
    if (f.empty() || h.empty()) throw empty_polynomial("sylvester_matrix: empty coefficient sequence");
    const std::size_t m = f.size() - 1, n = h.size() - 1;
    const std::size_t size = m + n;
    Matrix<T> s(size, size);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s(r, r + (m - i)) = f[i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s(n + r, r + (n - i)) = h[i];
    return s;
}

/// Resultant of f and h over Q: the determinant of their Sylvester matrix.
/// Two constants have resultant 1 (empty determinant).
inline Rational sylvester_resultant(std::span<const Rational> f, std::span<const Rational> h) {
    if (f.empty() || h.empty()) throw empty_polynomial("sylvester_resultant: empty coefficient sequence");
    if (f.back().is_zero() || h.back().is_zero())
        throw error("sylvester_resultant: leading coefficient is zero");
    if (f.size() == 1 && h.size() == 1) return Rational(1);
    return determinant(sylvester_matrix(f, h));
}

/// Resultant over a general commutative ring (symbolic coefficients).
template <class Ring>
Ring sylvester_resultant_ring(std::span<const Ring> f, std::span<const Ring> h) {
    if (f.empty() || h.empty()) throw empty_polynomial("sylvester_resultant: empty coefficient sequence");
    if (f.size() == 1 && h.size() == 1) throw error("sylvester_resultant_ring: both inputs constant");
    return determinant_cofactor(sylvester_matrix(f, h));
}

} // namespace hyperell
