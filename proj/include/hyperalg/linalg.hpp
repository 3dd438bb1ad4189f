#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperalg/scalar.hpp"

namespace hyperalg {

/// Row-major dense matrix over a field (Rational or double).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, ScalarTraits<T>::zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Gaussian elimination to reduced row echelon form in place. Pivots are
/// chosen by largest magnitude; entries with magnitude <= tol count as zero
/// (tol is ignored for exact rings). Returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m, double tol = 0.0) {
    using Tr = ScalarTraits<T>;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        double best_mag = 0.0;
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (Tr::is_zero(m(r, col), tol)) continue;
            double mag = Tr::magnitude(m(r, col));
            if (best == m.rows() || (!Tr::exact && mag > best_mag)) {
                best = r;
                best_mag = mag;
                if (Tr::exact) break;
            }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
        T inv = Tr::one() / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || Tr::is_zero(m(r, col), 0.0)) continue;
            T factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m, double tol = 0.0) {
    return row_reduce(m, tol).size();
}

/// Basis of { x : m x = 0 }.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, double tol = 0.0) {
    using Tr = ScalarTraits<T>;
    auto pivots = row_reduce(m, tol);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols(), Tr::zero());
        v[free] = Tr::one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hyperalg
