// Copyright 2026 The modlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MODLAT_MATRIX_H
#define MODLAT_MATRIX_H

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace modlat {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T &fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_) {
                throw std::invalid_argument("ragged matrix literal");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n, const T &one = T(1)) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; i++) {
            m(i, i) = one;
        }
        return m;
    }

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    T &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const T &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::vector<T> row(std::size_t r) const {
        return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; i++) {
            for (std::size_t j = 0; j < cols_; j++) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) {
            return false;
        }
        for (std::size_t i = 0; i < rows_; i++) {
            for (std::size_t j = i + 1; j < cols_; j++) {
                if (!((*this)(i, j) == (*this)(j, i))) {
                    return false;
                }
            }
        }
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; c++) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows_; r++) {
            std::swap((*this)(r, a), (*this)(r, b));
        }
    }

    bool operator==(const Matrix &other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix &other) const {
        return !(*this == other);
    }

    const std::vector<T> &data() const {
        return data_;
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            if (a(i, k) == T(0)) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); j++) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

}  // namespace modlat

#endif
