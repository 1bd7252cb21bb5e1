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

#include "modlat/cyclotomic.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "rational_linalg.h"

namespace modlat {

namespace {

uint32_t checked_lcm(uint32_t a, uint32_t b) {
    uint64_t l = std::lcm<uint64_t>(a, b);
    if (l > (1u << 24)) {
        throw std::overflow_error("cyclotomic conductor too large");
    }
    return static_cast<uint32_t>(l);
}

uint32_t reduce_exponent(int64_t k, uint32_t n) {
    int64_t r = k % static_cast<int64_t>(n);
    return static_cast<uint32_t>(r < 0 ? r + n : r);
}

std::vector<Cyclotomic::Term> compress(uint32_t n, std::vector<Rational> &dense) {
    std::vector<Cyclotomic::Term> out;
    for (uint32_t k = 0; k < n; k++) {
        if (sgn(dense[k]) != 0) {
            out.push_back({k, std::move(dense[k])});
        }
    }
    return out;
}

std::vector<Integer> compute_cyclotomic_polynomial(uint32_t n) {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<Integer> num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (uint32_t d = 1; d < n; d++) {
        if (n % d != 0) {
            continue;
        }
        const auto &div = cyclotomic_polynomial(d);
        std::size_t dd = div.size() - 1;
        std::vector<Integer> quot(num.size() - dd);
        for (std::size_t i = num.size() - 1; i + 1 > dd; i--) {
            Integer c = num[i];
            quot[i - dd] = c;
            if (c != 0) {
                for (std::size_t j = 0; j <= dd; j++) {
                    num[i - dd + j] -= c * div[j];
                }
            }
            if (i == dd) {
                break;
            }
        }
        num = std::move(quot);
    }
    return num;
}

}  // namespace

Rational mod1(const Rational &q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

Rational mod_positive(const Rational &q, const Integer &m) {
    if (sgn(m) <= 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    Rational scaled = q / Rational(m);
    return mod1(scaled) * Rational(m);
}

std::string to_string(const Rational &q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) {
        return c.get_num().get_str();
    }
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

uint64_t totient(uint64_t n) {
    uint64_t result = n;
    for (uint64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

const std::vector<Integer> &cyclotomic_polynomial(uint32_t n) {
    if (n == 0) {
        throw std::invalid_argument("cyclotomic polynomial index must be positive");
    }
    static std::recursive_mutex mutex;
    static std::map<uint32_t, std::unique_ptr<const std::vector<Integer>>> cache;
    std::lock_guard<std::recursive_mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Integer> poly;
        if (n == 1) {
            poly = {-1, 1};
        } else {
            poly = compute_cyclotomic_polynomial(n);
        }
        it = cache.emplace(n, std::make_unique<const std::vector<Integer>>(std::move(poly))).first;
    }
    return *it->second;
}

Cyclotomic::Cyclotomic(const Rational &value) {
    Rational c = value;
    c.canonicalize();
    if (sgn(c) != 0) {
        terms_.push_back({0, std::move(c)});
    }
}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value)) {
}

Cyclotomic::Cyclotomic(uint32_t conductor, std::vector<Term> terms) : conductor_(conductor), terms_(std::move(terms)) {
}

Cyclotomic Cyclotomic::from_terms(uint32_t conductor, std::vector<Term> terms) {
    if (conductor == 0) {
        throw std::invalid_argument("conductor must be positive");
    }
    std::vector<Rational> dense(conductor);
    for (auto &t : terms) {
        dense[t.exponent % conductor] += t.coefficient;
    }
    return Cyclotomic(conductor, compress(conductor, dense));
}

Cyclotomic Cyclotomic::zeta_power(uint32_t conductor, int64_t k) {
    if (conductor == 0) {
        throw std::invalid_argument("conductor must be positive");
    }
    return Cyclotomic(conductor, {{reduce_exponent(k, conductor), Rational(1)}});
}

Cyclotomic Cyclotomic::root_of_unity(const Rational &q) {
    Rational r = mod1(q);
    if (sgn(r) == 0) {
        return Cyclotomic(1L);
    }
    if (!r.get_den().fits_uint_p() || r.get_den() > (1u << 24)) {
        throw std::overflow_error("root of unity order too large");
    }
    uint32_t den = static_cast<uint32_t>(r.get_den().get_ui());
    uint32_t num = static_cast<uint32_t>(r.get_num().get_ui());
    if (den == 2) {
        return Cyclotomic(-1L);
    }
    if (den % 4 == 2) {
        // e(a/2m) = -e(((a - m)/2)/m) for m odd.
        uint32_t m = den / 2;
        int64_t k = (static_cast<int64_t>(num) - m) / 2;
        return Cyclotomic(m, {{reduce_exponent(k, m), Rational(-1)}});
    }
    return Cyclotomic(den, {{num, Rational(1)}});
}

Cyclotomic e(const Rational &q) {
    return Cyclotomic::root_of_unity(q);
}

std::vector<Rational> Cyclotomic::reduced() const {
    const uint32_t n = conductor_;
    const auto &phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    std::vector<Rational> dense(std::max<std::size_t>(n, deg));
    for (const auto &t : terms_) {
        dense[t.exponent] += t.coefficient;
    }
    for (std::size_t d = dense.size(); d-- > deg;) {
        if (sgn(dense[d]) == 0) {
            continue;
        }
        Rational c = dense[d];
        for (std::size_t j = 0; j < deg; j++) {
            if (phi[j] != 0) {
                dense[d - deg + j] -= c * phi[j];
            }
        }
        dense[d] = 0;
    }
    dense.resize(deg);
    return dense;
}

std::vector<Rational> Cyclotomic::coefficients() const {
    return reduced();
}

bool Cyclotomic::is_zero() const {
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() == 1) {
        return false;
    }
    for (const auto &c : reduced()) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (terms_.empty()) {
        return Rational(0);
    }
    if (terms_.size() == 1) {
        const auto &t = terms_[0];
        if (t.exponent == 0) {
            return t.coefficient;
        }
        if (2 * static_cast<uint64_t>(t.exponent) == conductor_) {
            return Rational(-t.coefficient);
        }
        return std::nullopt;
    }
    auto coeffs = reduced();
    for (std::size_t i = 1; i < coeffs.size(); i++) {
        if (sgn(coeffs[i]) != 0) {
            return std::nullopt;
        }
    }
    return coeffs.empty() ? Rational(0) : coeffs[0];
}

bool Cyclotomic::is_rational() const {
    return as_rational().has_value();
}

std::optional<Rational> Cyclotomic::root_exponent() const {
    if (terms_.size() == 1) {
        const auto &t = terms_[0];
        if (t.coefficient == 1) {
            return mod1(Rational(t.exponent, conductor_));
        }
        if (t.coefficient == -1) {
            return mod1(Rational(t.exponent, conductor_) + Rational(1, 2));
        }
    }
    if (terms_.empty()) {
        return std::nullopt;
    }
    // Every root of unity in Q(zeta_N) has order dividing lcm(2, N).
    uint32_t order = conductor_ % 2 == 0 ? conductor_ : 2 * conductor_;
    Cyclotomic norm = *this * conjugate();
    if (norm != Cyclotomic(1L)) {
        return std::nullopt;
    }
    for (uint32_t k = 0; k < order; k++) {
        Rational q(k, order);
        q.canonicalize();
        if (*this == root_of_unity(q)) {
            return q;
        }
    }
    return std::nullopt;
}

Cyclotomic Cyclotomic::embed(uint32_t conductor) const {
    if (conductor == 0 || conductor % conductor_ != 0) {
        throw std::invalid_argument("embed: target conductor must be a multiple of the current one");
    }
    uint32_t f = conductor / conductor_;
    std::vector<Term> out = terms_;
    for (auto &t : out) {
        t.exponent *= f;
    }
    return Cyclotomic(conductor, std::move(out));
}

Cyclotomic Cyclotomic::minimal() const {
    auto rat = as_rational();
    if (rat) {
        return Cyclotomic(*rat);
    }
    const uint32_t n = conductor_;
    const std::vector<Rational> target = reduced();
    for (uint32_t m = 3; m <= n; m++) {
        if (n % m != 0 || m % 4 == 2) {
            continue;
        }
        const std::size_t phi_m = totient(m);
        Matrix<Rational> basis(target.size(), phi_m);
        for (std::size_t j = 0; j < phi_m; j++) {
            auto col = zeta_power(n, static_cast<int64_t>(j * (n / m))).reduced();
            for (std::size_t i = 0; i < col.size(); i++) {
                basis(i, j) = col[i];
            }
        }
        auto sol = detail::solve(std::move(basis), target);
        if (!sol) {
            continue;
        }
        std::vector<Term> out;
        for (uint32_t j = 0; j < phi_m; j++) {
            if (sgn((*sol)[j]) != 0) {
                out.push_back({j, (*sol)[j]});
            }
        }
        return Cyclotomic(m, std::move(out));
    }
    // Only reached for conductors = 2 mod 4 whose value needs all of Q(zeta_n).
    std::vector<Term> out;
    for (uint32_t j = 0; j < target.size(); j++) {
        if (sgn(target[j]) != 0) {
            out.push_back({j, target[j]});
        }
    }
    return Cyclotomic(n, std::move(out));
}

Cyclotomic Cyclotomic::conjugate() const {
    return galois(-1);
}

Cyclotomic Cyclotomic::galois(int64_t k) const {
    if (std::gcd<int64_t, int64_t>(k < 0 ? -k : k, conductor_) != 1) {
        throw std::invalid_argument("galois: exponent must be coprime to the conductor");
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        out.push_back({reduce_exponent(static_cast<int64_t>(t.exponent) * k, conductor_), t.coefficient});
    }
    std::sort(out.begin(), out.end(), [](const Term &a, const Term &b) { return a.exponent < b.exponent; });
    return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
    if (terms_.size() == 1) {
        const auto &t = terms_[0];
        return Cyclotomic(conductor_, {{reduce_exponent(-static_cast<int64_t>(t.exponent), conductor_),
                                        Rational(1 / t.coefficient)}});
    }
    if (is_zero()) {
        throw std::domain_error("division by zero in cyclotomic field");
    }
    // Columns are x * zeta^j in the canonical basis; solve for the preimage of 1.
    const auto base = reduced();
    const std::size_t deg = base.size();
    Matrix<Rational> mult(deg, deg);
    for (std::size_t j = 0; j < deg; j++) {
        auto col = (*this * zeta_power(conductor_, static_cast<int64_t>(j))).reduced();
        for (std::size_t i = 0; i < deg; i++) {
            mult(i, j) = col[i];
        }
    }
    std::vector<Rational> rhs(deg);
    rhs[0] = 1;
    auto sol = detail::solve(std::move(mult), std::move(rhs));
    if (!sol) {
        throw std::domain_error("division by zero in cyclotomic field");
    }
    std::vector<Term> out;
    for (uint32_t j = 0; j < deg; j++) {
        if (sgn((*sol)[j]) != 0) {
            out.push_back({j, (*sol)[j]});
        }
    }
    return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::pow(int64_t e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Cyclotomic result(1L);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

std::complex<double> Cyclotomic::approx_complex() const {
    long double re = 0;
    long double im = 0;
    const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
    for (const auto &t : terms_) {
        long double c = t.coefficient.get_d();
        long double angle = tau * t.exponent / conductor_;
        re += c * std::cos(angle);
        im += c * std::sin(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto &t : out.terms_) {
        t.coefficient = -t.coefficient;
    }
    return out;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &other) {
    if (other.terms_.empty()) {
        return *this;
    }
    uint32_t l = checked_lcm(conductor_, other.conductor_);
    CyclotomicAccumulator acc(l);
    acc.add(*this);
    acc.add(other);
    *this = acc.value();
    return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &other) {
    return *this += -other;
}

Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.terms_.empty() || b.terms_.empty()) {
        return Cyclotomic();
    }
    uint32_t l = checked_lcm(a.conductor_, b.conductor_);
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        uint64_t ea = static_cast<uint64_t>(a.terms_[0].exponent) * (l / a.conductor_);
        uint64_t eb = static_cast<uint64_t>(b.terms_[0].exponent) * (l / b.conductor_);
        Rational c = a.terms_[0].coefficient * b.terms_[0].coefficient;
        return Cyclotomic(l, {{static_cast<uint32_t>((ea + eb) % l), std::move(c)}});
    }
    CyclotomicAccumulator acc(l);
    acc.add_product(a, b);
    return acc.value();
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &other) {
    *this = *this * other;
    return *this;
}

Cyclotomic &Cyclotomic::operator/=(const Cyclotomic &other) {
    *this = *this * other.inverse();
    return *this;
}

std::string Cyclotomic::root_str() const {
    auto q = root_exponent();
    if (!q) {
        throw std::domain_error("value is not a root of unity");
    }
    return "e(" + q->get_num().get_str() + "/" + q->get_den().get_str() + ")";
}

std::string Cyclotomic::str() const {
    if (auto r = as_rational()) {
        return to_string(*r);
    }
    if (root_exponent()) {
        return root_str();
    }
    Cyclotomic m = minimal();
    std::string out;
    for (const auto &t : m.terms_) {
        Rational c = t.coefficient;
        bool negative = sgn(c) < 0;
        if (!out.empty()) {
            out += negative ? " - " : " + ";
            if (negative) {
                c = -c;
            }
        }
        if (t.exponent == 0) {
            out += to_string(c);
            continue;
        }
        Rational q(t.exponent, m.conductor_);
        q.canonicalize();
        std::string root = "e(" + q.get_num().get_str() + "/" + q.get_den().get_str() + ")";
        if (c == 1) {
            out += root;
        } else if (c == -1) {
            out += "-" + root;
        } else {
            out += to_string(c) + "*" + root;
        }
    }
    return out;
}

CyclotomicAccumulator::CyclotomicAccumulator(uint32_t conductor) : conductor_(conductor), dense_(conductor) {
    if (conductor == 0) {
        throw std::invalid_argument("conductor must be positive");
    }
}

void CyclotomicAccumulator::add(const Cyclotomic &a) {
    if (conductor_ % a.conductor() != 0) {
        throw std::invalid_argument("accumulator conductor does not contain operand");
    }
    uint32_t f = conductor_ / a.conductor();
    for (const auto &t : a.terms()) {
        dense_[t.exponent * f] += t.coefficient;
    }
}

void CyclotomicAccumulator::add_product(const Cyclotomic &a, const Cyclotomic &b) {
    if (conductor_ % a.conductor() != 0 || conductor_ % b.conductor() != 0) {
        throw std::invalid_argument("accumulator conductor does not contain operand");
    }
    uint64_t fa = conductor_ / a.conductor();
    uint64_t fb = conductor_ / b.conductor();
    for (const auto &ta : a.terms()) {
        uint64_t ea = ta.exponent * fa;
        for (const auto &tb : b.terms()) {
            uint64_t k = (ea + tb.exponent * fb) % conductor_;
            dense_[k] += ta.coefficient * tb.coefficient;
        }
    }
}

Cyclotomic CyclotomicAccumulator::value() const {
    std::vector<Cyclotomic::Term> terms;
    for (uint32_t k = 0; k < conductor_; k++) {
        if (sgn(dense_[k]) != 0) {
            terms.push_back({k, dense_[k]});
        }
    }
    return Cyclotomic(conductor_, std::move(terms));
}

void CyclotomicAccumulator::clear() {
    for (auto &c : dense_) {
        c = 0;
    }
}

uint32_t common_conductor(const Matrix<Cyclotomic> &m) {
    uint32_t l = 1;
    for (const auto &x : m.data()) {
        l = checked_lcm(l, x.conductor());
    }
    return l;
}

Matrix<Cyclotomic> operator*(const Matrix<Cyclotomic> &a, const Matrix<Cyclotomic> &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    uint32_t l = checked_lcm(common_conductor(a), common_conductor(b));
    Matrix<Cyclotomic> out(a.rows(), b.cols());
    CyclotomicAccumulator acc(l);
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < b.cols(); j++) {
            acc.clear();
            for (std::size_t k = 0; k < a.cols(); k++) {
                acc.add_product(a(i, k), b(k, j));
            }
            out(i, j) = acc.value();
        }
    }
    return out;
}

Matrix<Cyclotomic> scale(const Matrix<Cyclotomic> &m, const Cyclotomic &c) {
    Matrix<Cyclotomic> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++) {
            out(i, j) = m(i, j) * c;
        }
    }
    return out;
}

Matrix<Cyclotomic> conjugate_transpose(const Matrix<Cyclotomic> &m) {
    Matrix<Cyclotomic> out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++) {
            out(j, i) = m(i, j).conjugate();
        }
    }
    return out;
}

bool is_zero(const Matrix<Cyclotomic> &m) {
    return std::all_of(m.data().begin(), m.data().end(), [](const Cyclotomic &x) { return x.is_zero(); });
}

bool equal(const Matrix<Cyclotomic> &a, const Matrix<Cyclotomic> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < a.data().size(); i++) {
        if (a.data()[i] != b.data()[i]) {
            return false;
        }
    }
    return true;
}

std::size_t rank(Matrix<Cyclotomic> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); c++) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(p, r);
        Cyclotomic inv = m(r, c).inverse();
        for (std::size_t i = r + 1; i < m.rows(); i++) {
            if (m(i, c).is_zero()) {
                continue;
            }
            Cyclotomic f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); j++) {
                m(i, j) -= f * m(r, j);
            }
        }
        r++;
    }
    return r;
}

namespace {

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

bool is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

// Element of order exactly n in (Z/p)^*, p = 1 mod n.
uint64_t primitive_root_of_order(uint64_t n, uint64_t p) {
    auto factors = prime_factors(n);
    for (uint64_t x = 2; x < p; x++) {
        uint64_t h = pow_mod(x, (p - 1) / n, p);
        bool ok = true;
        for (uint64_t f : factors) {
            if (pow_mod(h, n / f, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return h;
        }
    }
    throw std::logic_error("no root of the requested order");
}

// Rank of the image of m under zeta_n -> h in F_p; nullopt when a denominator vanishes mod p.
std::optional<std::size_t> rank_mod_p(const Matrix<Cyclotomic> &m, uint32_t n, uint64_t p) {
    const uint64_t h = primitive_root_of_order(n, p);
    std::vector<uint64_t> powers(n);
    powers[0] = 1;
    for (uint32_t k = 1; k < n; k++) {
        powers[k] = powers[k - 1] * h % p;
    }
    const Integer big_p(static_cast<unsigned long>(p));
    std::vector<std::vector<uint64_t>> a(m.rows(), std::vector<uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++) {
            const Cyclotomic &x = m(i, j);
            const uint32_t step = n / x.conductor();
            uint64_t v = 0;
            for (const auto &t : x.terms()) {
                Integer num = t.coefficient.get_num() % big_p;
                if (num < 0) {
                    num += big_p;
                }
                Integer den = t.coefficient.get_den() % big_p;
                if (den == 0) {
                    return std::nullopt;
                }
                uint64_t c = num.get_ui() * pow_mod(den.get_ui(), p - 2, p) % p;
                v = (v + c * powers[(static_cast<uint64_t>(t.exponent) * step) % n]) % p;
            }
            a[i][j] = v;
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); c++) {
        std::size_t piv = r;
        while (piv < m.rows() && a[piv][c] == 0) {
            piv++;
        }
        if (piv == m.rows()) {
            continue;
        }
        std::swap(a[piv], a[r]);
        const uint64_t inv = pow_mod(a[r][c], p - 2, p);
        for (std::size_t i = r + 1; i < m.rows(); i++) {
            if (a[i][c] == 0) {
                continue;
            }
            const uint64_t f = a[i][c] * inv % p;
            for (std::size_t j = c; j < m.cols(); j++) {
                a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
            }
        }
        r++;
    }
    return r;
}

}  // namespace

bool is_nonsingular(const Matrix<Cyclotomic> &m) {
    if (!m.is_square()) {
        return false;
    }
    const uint32_t n = common_conductor(m);
    // A nonzero image of det under a ring map proves det != 0.
    int tried = 0;
    for (uint64_t p = (uint64_t{1} << 30) / n * n + 1; tried < 4 && p < (uint64_t{1} << 31); p += n) {
        if (!is_prime(p)) {
            continue;
        }
        tried++;
        auto r = rank_mod_p(m, n, p);
        if (r && *r == m.rows()) {
            return true;
        }
    }
    return rank(m) == m.rows();
}

}  // namespace modlat
