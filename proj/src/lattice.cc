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

#include "modlat/lattice.h"

#include <algorithm>

namespace modlat {

Integer determinant(const IntMatrix &m) {
    if (!m.is_square()) {
        throw LatticeError(LatticeError::Kind::NotSquare, "determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; k++) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) {
                p++;
            }
            if (p == n) {
                return 0;
            }
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; i++) {
            for (std::size_t j = k + 1; j < n; j++) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

GramMatrix GramMatrix::check(IntMatrix entries) {
    if (!entries.is_square() || entries.rows() == 0) {
        throw LatticeError(LatticeError::Kind::NotSquare, "Gram matrix must be square and non-empty");
    }
    const std::size_t n = entries.rows();
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            if (entries(i, j) != entries(j, i)) {
                throw LatticeError(LatticeError::Kind::NotSymmetric,
                                   "Gram matrix is not symmetric at (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ")");
            }
        }
    }
    for (std::size_t i = 0; i < n; i++) {
        if (mpz_odd_p(entries(i, i).get_mpz_t())) {
            throw LatticeError(LatticeError::Kind::OddDiagonal,
                               "Gram matrix has odd diagonal entry at index " + std::to_string(i));
        }
    }
    Integer det = determinant(entries);
    if (det == 0) {
        throw LatticeError(LatticeError::Kind::Singular, "Gram matrix is singular");
    }
    return GramMatrix(std::move(entries), std::move(det));
}

SmithDecomposition smith_normal_form(const IntMatrix &m) {
    if (!m.is_square()) {
        throw LatticeError(LatticeError::Kind::NotSquare, "Smith form implemented for square matrices");
    }
    const std::size_t n = m.rows();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);

    auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer &q) {
        // row_dst -= q * row_src
        for (std::size_t c = 0; c < n; c++) {
            a(dst, c) -= q * a(src, c);
            u(dst, c) -= q * u(src, c);
        }
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer &q) {
        for (std::size_t r = 0; r < n; r++) {
            a(r, dst) -= q * a(r, src);
            v(r, dst) -= q * v(r, src);
        }
    };

    for (std::size_t t = 0; t < n; t++) {
        while (true) {
            // Pivot: smallest nonzero absolute value in the trailing block.
            std::size_t pr = n;
            std::size_t pc = n;
            for (std::size_t i = t; i < n; i++) {
                for (std::size_t j = t; j < n; j++) {
                    if (a(i, j) != 0 && (pr == n || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr == n) {
                break;
            }
            if (pr != t) {
                a.swap_rows(pr, t);
                u.swap_rows(pr, t);
            }
            if (pc != t) {
                a.swap_cols(pc, t);
                v.swap_cols(pc, t);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < n; i++) {
                if (a(i, t) == 0) {
                    continue;
                }
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                row_axpy(i, t, q);
                if (a(i, t) != 0) {
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; j++) {
                if (a(t, j) == 0) {
                    continue;
                }
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                col_axpy(j, t, q);
                if (a(t, j) != 0) {
                    clean = false;
                }
            }
            if (!clean) {
                continue;
            }

            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; i++) {
                for (std::size_t j = t + 1; j < n; j++) {
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        row_axpy(t, i, -1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < n; c++) {
                a(t, c) = -a(t, c);
                u(t, c) = -u(t, c);
            }
        }
    }

    SmithDecomposition out{std::move(u), std::move(v), {}};
    for (std::size_t i = 0; i < n; i++) {
        out.diagonal.push_back(a(i, i));
    }
    return out;
}

SmithDecomposition smith_normal_form(const GramMatrix &b) {
    return smith_normal_form(b.entries());
}

RationalVector normalize_mod1(const RationalVector &v) {
    RationalVector out;
    out.reserve(v.size());
    for (const auto &x : v) {
        out.push_back(mod1(x));
    }
    return out;
}

DiscriminantGroup discriminant_group(const GramMatrix &b) {
    // B^-1 = V D^-1 U, so B^-1 Z^n is spanned by the columns of V D^-1.
    const std::size_t n = b.dim();
    SmithDecomposition snf = smith_normal_form(b);

    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; i++) {
        if (snf.diagonal[i] != 1) {
            active.push_back(i);
        }
    }

    DiscriminantGroup g;
    for (std::size_t i : active) {
        g.invariant_factors_.push_back(snf.diagonal[i]);
    }

    std::vector<Integer> digits(active.size(), 0);
    std::vector<RationalVector> reps;
    while (true) {
        RationalVector vec(n, Rational(0));
        for (std::size_t a = 0; a < active.size(); a++) {
            const std::size_t col = active[a];
            Rational coeff(digits[a], snf.diagonal[col]);
            coeff.canonicalize();
            for (std::size_t r = 0; r < n; r++) {
                vec[r] += coeff * Rational(snf.right(r, col));
            }
        }
        reps.push_back(normalize_mod1(vec));

        std::size_t pos = 0;
        while (pos < active.size()) {
            digits[pos] += 1;
            if (digits[pos] < snf.diagonal[active[pos]]) {
                break;
            }
            digits[pos] = 0;
            pos++;
        }
        if (pos == active.size()) {
            break;
        }
    }

    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    if (reps.size() != abs(b.det())) {
        throw std::logic_error("discriminant group enumeration does not match |det B|");
    }
    g.representatives_ = std::move(reps);
    for (std::size_t i = 0; i < g.representatives_.size(); i++) {
        g.index_.emplace(g.representatives_[i], i);
    }
    return g;
}

std::optional<std::size_t> DiscriminantGroup::index_of(const RationalVector &v) const {
    auto it = index_.find(normalize_mod1(v));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t DiscriminantGroup::add(std::size_t a, std::size_t b) const {
    const auto &x = representatives_.at(a);
    const auto &y = representatives_.at(b);
    RationalVector sum(x.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        sum[i] = x[i] + y[i];
    }
    return *index_of(sum);
}

std::size_t DiscriminantGroup::negate(std::size_t a) const {
    RationalVector neg;
    for (const auto &x : representatives_.at(a)) {
        neg.push_back(-x);
    }
    return *index_of(neg);
}

bool in_discriminant_group(const GramMatrix &b, const RationalVector &v) {
    if (v.size() != b.dim()) {
        return false;
    }
    for (std::size_t i = 0; i < b.dim(); i++) {
        Rational s = 0;
        for (std::size_t j = 0; j < b.dim(); j++) {
            s += Rational(b(i, j)) * v[j];
        }
        if (s.get_den() != 1) {
            return false;
        }
    }
    return true;
}

namespace {

Rational form(const GramMatrix &b, const RationalVector &v, const RationalVector &w) {
    Rational s = 0;
    for (std::size_t i = 0; i < b.dim(); i++) {
        if (sgn(v[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.dim(); j++) {
            s += v[i] * Rational(b(i, j)) * w[j];
        }
    }
    return s;
}

void require_member(const GramMatrix &b, const RationalVector &v) {
    if (!in_discriminant_group(b, v)) {
        throw LatticeError(LatticeError::Kind::NotInDiscriminantGroup, "vector is not in B^-1 Z^n");
    }
}

}  // namespace

Rational bilinear_mod1(const GramMatrix &b, const RationalVector &v, const RationalVector &w) {
    require_member(b, v);
    require_member(b, w);
    return mod1(form(b, v, w));
}

Rational quadratic_mod2(const GramMatrix &b, const RationalVector &v) {
    require_member(b, v);
    return mod_positive(form(b, v, v), 2);
}

}  // namespace modlat
