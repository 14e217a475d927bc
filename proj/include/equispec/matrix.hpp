#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "equispec/error.hpp"

namespace equispec {

using Complex = std::complex<double>;

/// Row-major dense matrix. Square instances are the parent/quotient matrices;
/// rectangular ones show up as characteristic matrices and stacked bases.
template <class T>
class BasicMatrix {
public:
    using value_type = T;

    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    BasicMatrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) {
                throw Error(ErrorCode::DimensionMismatch, "ragged initializer list");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static BasicMatrix from_row_major(std::size_t rows, std::size_t cols, std::vector<T> entries) {
        if (entries.size() != rows * cols) {
            throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
        }
        BasicMatrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.data_ = std::move(entries);
        return m;
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    static BasicMatrix ones(std::size_t rows, std::size_t cols) { return BasicMatrix(rows, cols, T{1}); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    const std::vector<T>& entries() const noexcept { return data_; }

    BasicMatrix transpose() const {
        BasicMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool operator==(const BasicMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;
using CMatrix = BasicMatrix<Complex>;

template <class T>
BasicMatrix<T> operator*(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    BasicMatrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T aik = a(i, k);
            if (aik == T{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <class T>
BasicMatrix<T> operator-(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
    auto out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

/// Maximum absolute row sum.
template <class T>
double norm_inf(const BasicMatrix<T>& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (const auto& v : m.row(i)) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

/// Largest absolute entry.
template <class T>
double max_abs(const BasicMatrix<T>& m) {
    double best = 0.0;
    for (const auto& v : m.entries()) best = std::max(best, static_cast<double>(std::abs(v)));
    return best;
}

inline CMatrix to_complex(const Matrix& m) {
    std::vector<Complex> e(m.entries().begin(), m.entries().end());
    return CMatrix::from_row_major(m.rows(), m.cols(), std::move(e));
}

inline double trace(const Matrix& m) {
    double t = 0.0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

/// ||M - M^T||_inf for a square matrix.
inline double asymmetry(const Matrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j) - m(j, i));
        best = std::max(best, s);
    }
    return best;
}

/// Throws unless `m` is a non-empty square matrix with finite entries.
inline void require_valid_square(const Matrix& m, const char* what) {
    if (m.rows() == 0 || !m.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": expected a non-empty square matrix");
    }
    for (double v : m.entries()) {
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidParams, std::string(what) + ": non-finite entry");
    }
}

}  // namespace equispec
