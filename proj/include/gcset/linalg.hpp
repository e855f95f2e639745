#pragma once

#include "gcset/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace gcset::linalg {

/// Rank by exact Gaussian elimination over the rationals.
inline Eigen::Index rank(QMatrix m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        const Rational inv = Rational(1) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Exact determinant of a square rational matrix.
inline Rational determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const Eigen::Index n = m.rows();
    Rational det(1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = c; i < n; ++i) {
            if (!m(i, c).is_zero()) { pivot = i; break; }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            m.row(pivot).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        const Rational inv = Rational(1) / m(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const Rational f = m(i, c) * inv;
            for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Basis of the right kernel, one column per basis vector.
inline QMatrix kernel_basis(QMatrix m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        const Rational inv = Rational(1) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<Eigen::Index> free_col;
    {
        std::size_t p = 0;
        for (Eigen::Index c = 0; c < cols; ++c) {
            if (p < pivot_col.size() && pivot_col[p] == c) { ++p; continue; }
            free_col.push_back(c);
        }
    }
    QMatrix kernel = QMatrix::Zero(cols, static_cast<Eigen::Index>(free_col.size()));
    for (std::size_t k = 0; k < free_col.size(); ++k) {
        kernel(free_col[k], static_cast<Eigen::Index>(k)) = Rational(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            kernel(pivot_col[i], static_cast<Eigen::Index>(k)) =
                -m(static_cast<Eigen::Index>(i), free_col[k]);
        }
    }
    return kernel;
}

/// Rank by Bareiss fraction-free elimination over arbitrary-precision
/// integers. All intermediate divisions are exact; no fractions appear.
inline Eigen::Index fraction_free_rank(ZMatrix m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    BigInt prev = 1;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (m(i, c) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (Eigen::Index j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        }
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

}  // namespace gcset::linalg
