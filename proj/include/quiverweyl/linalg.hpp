#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quiverweyl/errors.hpp"

namespace qw {

using Rational = boost::multiprecision::cpp_rational;

// Dense exact-rational matrix, just enough for the representation checks:
// products, kernels and ranks via Gaussian elimination.
struct QMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> a; // row-major

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rational& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    bool operator==(const QMatrix&) const = default;

    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }
};

inline QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    if (x.cols != y.rows) throw InternalInconsistency("matrix shape mismatch in product");
    QMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

inline QMatrix operator+(const QMatrix& x, const QMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw InternalInconsistency("matrix shape mismatch in sum");
    QMatrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

inline QMatrix operator-(const QMatrix& x, const QMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw InternalInconsistency("matrix shape mismatch in difference");
    QMatrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

inline QMatrix operator-(const QMatrix& x) {
    QMatrix r = x;
    for (auto& v : r.a) v = -v;
    return r;
}

inline QMatrix scale(const Rational& c, const QMatrix& x) {
    QMatrix r = x;
    for (auto& v : r.a) v *= c;
    return r;
}

// In-place reduced row echelon form; returns the rank and optionally the
// pivot columns.
inline std::size_t rref(QMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(rank, j), m(pivot, j));
        Rational inv = m(rank, col);
        for (std::size_t j = col; j < m.cols; ++j) m(rank, j) /= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= f * m(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

inline std::size_t rank(QMatrix m) { return rref(m); }

inline std::size_t nullity(const QMatrix& m) { return m.cols - rank(m); }

// Basis of the right kernel, one column vector per basis element.
inline std::vector<std::vector<Rational>> kernel_basis(QMatrix m) {
    const std::size_t n = m.cols;
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    std::vector<long long> pivot_of_col(n, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<long long>(r);
    std::vector<std::vector<Rational>> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<Rational> v(n, 0);
        v[col] = 1;
        for (std::size_t c2 = 0; c2 < n; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = -m(static_cast<std::size_t>(pivot_of_col[c2]), col);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace qw
