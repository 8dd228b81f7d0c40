#pragma once
#include "spun/numbers.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace spun {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows)
            for (long long x : r) a_.emplace_back(x);
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows) {
        IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        return m;
    }

    static IntMatrix from_columns(const std::vector<IntVector>& cols) {
        IntMatrix m(cols.empty() ? 0 : cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVector row(std::size_t i) const {
        return IntVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

    IntVector column(std::size_t j) const {
        IntVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    p(i, j) += aik * o(k, j);
            }
        return p;
    }

    IntVector apply(const IntVector& x) const {
        IntVector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

} // namespace spun
