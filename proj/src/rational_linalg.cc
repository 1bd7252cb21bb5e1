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

#include "rational_linalg.h"

#include <stdexcept>

namespace modlat::detail {

std::optional<std::vector<Rational>> solve(Matrix<Rational> a, std::vector<Rational> b) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (b.size() != rows) {
        throw std::invalid_argument("solve: right-hand side has the wrong length");
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; c++) {
        std::size_t p = r;
        while (p < rows && sgn(a(p, c)) == 0) {
            p++;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            a.swap_rows(p, r);
            std::swap(b[p], b[r]);
        }
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < cols; j++) {
            a(r, j) *= inv;
        }
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; i++) {
            if (i == r || sgn(a(i, c)) == 0) {
                continue;
            }
            Rational f = a(i, c);
            for (std::size_t j = c; j < cols; j++) {
                if (sgn(a(r, j)) != 0) {
                    a(i, j) -= f * a(r, j);
                }
            }
            b[i] -= f * b[r];
        }
        pivot_cols.push_back(c);
        r++;
    }
    for (std::size_t i = r; i < rows; i++) {
        if (sgn(b[i]) != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < pivot_cols.size(); i++) {
        x[pivot_cols[i]] = b[i];
    }
    return x;
}

}  // namespace modlat::detail
