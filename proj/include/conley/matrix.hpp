#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "conley/error.hpp"
#include "conley/rational.hpp"

namespace conley {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q. The 0x0 matrix is a valid value and stands
/// for the endomorphism of the zero space.
class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            fail(ErrorCode::dimension,
                 "matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                     std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) fail(ErrorCode::dimension, "ragged matrix rows");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& columns) {
        RationalMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) fail(ErrorCode::dimension, "column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
    const std::vector<Rational>& entries() const noexcept { return entries_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RationalVector row(std::size_t i) const {
        return RationalVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    RationalVector column(std::size_t j) const {
        RationalVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Rational trace() const {
        require_square("trace");
        Rational t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    void require_square(const char* what) const {
        if (!is_square())
            fail(ErrorCode::dimension, std::string(what) + ": matrix is " + std::to_string(rows_) +
                                           "x" + std::to_string(cols_) + ", expected square");
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
        same_shape(a, b);
        RationalMatrix c = a;
        for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
        return c;
    }

    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
        same_shape(a, b);
        RationalMatrix c = a;
        for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
        return c;
    }

    friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
        RationalMatrix c = a;
        for (auto& e : c.entries_) e *= s;
        return c;
    }

    // Skips zero entries of the left factor; most matrices here are sparse.
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_)
            fail(ErrorCode::dimension, "product of " + std::to_string(a.rows_) + "x" +
                                           std::to_string(a.cols_) + " and " +
                                           std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        RationalMatrix c(a.rows_, b.cols_);
        Rational term;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == 0) continue;
                    term = aik * b(k, j);
                    c(i, j) += term;
                }
            }
        return c;
    }

    friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
        if (a.cols_ != v.size()) fail(ErrorCode::dimension, "matrix-vector size mismatch");
        RationalVector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
        return out;
    }

    RationalMatrix power(std::size_t k) const {
        require_square("power");
        RationalMatrix result = identity(rows_);
        RationalMatrix base = *this;
        while (k > 0) {
            if (k & 1U) result = result * base;
            k >>= 1U;
            if (k > 0) base = base * base;
        }
        return result;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : ",[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += (*this)(i, j).get_str();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    static void same_shape(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::dimension, "shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

} // namespace conley
