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

#ifndef MODLAT_CYCLOTOMIC_H
#define MODLAT_CYCLOTOMIC_H

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlat/matrix.h"

namespace modlat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduces q into [0, 1).
Rational mod1(const Rational &q);
/// Reduces q into [0, m) for a positive integer modulus m.
Rational mod_positive(const Rational &q, const Integer &m);
/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational &q);
/// Euler's totient.
uint64_t totient(uint64_t n);

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Values are held as a sparse sum of powers of zeta_N, i.e. an element of
/// the group ring Q[x]/(x^N - 1). This makes products of roots of unity
/// monomial. The canonical representative lives in Q[x]/(Phi_N), exposed by
/// `coefficients()`; equality, zero testing and printing all go through it.
class Cyclotomic {
   public:
    /// One term c * zeta_N^exponent, exponent in [0, N).
    struct Term {
        uint32_t exponent;
        Rational coefficient;
    };

    Cyclotomic() = default;
    Cyclotomic(const Rational &value);  // NOLINT(google-explicit-constructor)
    Cyclotomic(long value);             // NOLINT(google-explicit-constructor)

    /// e(q) = exp(2 pi i q). The conductor divides the reduced denominator of q mod 1.
    static Cyclotomic root_of_unity(const Rational &q);
    /// zeta_N^k.
    static Cyclotomic zeta_power(uint32_t conductor, int64_t k);
    /// Builds sum_k c_k zeta_N^k; coefficients need not be reduced.
    static Cyclotomic from_terms(uint32_t conductor, std::vector<Term> terms);

    uint32_t conductor() const {
        return conductor_;
    }
    const std::vector<Term> &terms() const {
        return terms_;
    }

    /// Canonical power-basis coefficients at the stored conductor, length phi(N).
    std::vector<Rational> coefficients() const;
    /// The same value re-expressed over the smallest conductor that contains it,
    /// in canonical power-basis form.
    Cyclotomic minimal() const;
    /// Embeds into Q(zeta_M); requires conductor() | M.
    Cyclotomic embed(uint32_t conductor) const;

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;
    /// Returns a in [0,1) with *this == e(a), if this is a root of unity.
    std::optional<Rational> root_exponent() const;

    Cyclotomic conjugate() const;
    Cyclotomic inverse() const;
    Cyclotomic pow(int64_t e) const;
    /// Galois action zeta_N -> zeta_N^k, gcd(k, N) = 1.
    Cyclotomic galois(int64_t k) const;

    std::complex<double> approx_complex() const;

    Cyclotomic operator-() const;
    Cyclotomic &operator+=(const Cyclotomic &other);
    Cyclotomic &operator-=(const Cyclotomic &other);
    Cyclotomic &operator*=(const Cyclotomic &other);
    Cyclotomic &operator/=(const Cyclotomic &other);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) {
        return a += b;
    }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) {
        return a -= b;
    }
    friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic &b) {
        return a /= b;
    }
    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const Cyclotomic &a, const Cyclotomic &b) {
        return !(a == b);
    }

    /// Value syntax: rationals as "p/q", roots of unity as "e(a/b)", anything else
    /// as a sum of "c*e(a/b)" terms over the minimal conductor. Equal values print
    /// identically.
    std::string str() const;
    /// Always "e(a/b)" with 0 <= a/b < 1; requires a root of unity.
    std::string root_str() const;

   private:
    friend class CyclotomicAccumulator;
    Cyclotomic(uint32_t conductor, std::vector<Term> terms);
    std::vector<Rational> reduced() const;

    uint32_t conductor_ = 1;
    std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients
};

Cyclotomic e(const Rational &q);

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<Integer> &cyclotomic_polynomial(uint32_t n);

/// Sums products into a fixed conductor without intermediate allocation.
class CyclotomicAccumulator {
   public:
    explicit CyclotomicAccumulator(uint32_t conductor);
    void add(const Cyclotomic &a);
    void add_product(const Cyclotomic &a, const Cyclotomic &b);
    Cyclotomic value() const;
    void clear();

   private:
    uint32_t conductor_;
    std::vector<Rational> dense_;
};

Matrix<Cyclotomic> operator*(const Matrix<Cyclotomic> &a, const Matrix<Cyclotomic> &b);
Matrix<Cyclotomic> scale(const Matrix<Cyclotomic> &m, const Cyclotomic &c);
Matrix<Cyclotomic> conjugate_transpose(const Matrix<Cyclotomic> &m);
bool is_zero(const Matrix<Cyclotomic> &m);
bool equal(const Matrix<Cyclotomic> &a, const Matrix<Cyclotomic> &b);
/// Least common multiple of all entry conductors.
uint32_t common_conductor(const Matrix<Cyclotomic> &m);
/// Row-echelon rank over the field.
std::size_t rank(Matrix<Cyclotomic> m);
/// Square and of full rank. Certified by reduction modulo primes p = 1 mod N
/// when possible, falling back to exact elimination.
bool is_nonsingular(const Matrix<Cyclotomic> &m);

}  // namespace modlat

#endif
