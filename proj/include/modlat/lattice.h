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

#ifndef MODLAT_LATTICE_H
#define MODLAT_LATTICE_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlat/cyclotomic.h"
#include "modlat/matrix.h"

namespace modlat {

using IntMatrix = Matrix<Integer>;
using RationalVector = std::vector<Rational>;

class LatticeError : public std::invalid_argument {
   public:
    enum class Kind { NotSquare, NotSymmetric, OddDiagonal, Singular, NotInDiscriminantGroup };

    LatticeError(Kind kind, const std::string &what) : std::invalid_argument(what), kind_(kind) {
    }
    Kind kind() const {
        return kind_;
    }

   private:
    Kind kind_;
};

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const IntMatrix &m);

/// A symmetric, even, nonsingular integer matrix. Only constructible through
/// `check`, so every instance satisfies all three properties.
class GramMatrix {
   public:
    static GramMatrix check(IntMatrix entries);

    std::size_t dim() const {
        return entries_.rows();
    }
    const IntMatrix &entries() const {
        return entries_;
    }
    const Integer &operator()(std::size_t i, std::size_t j) const {
        return entries_(i, j);
    }
    /// Signed determinant; |det| is the rank of the associated category.
    const Integer &det() const {
        return det_;
    }

    bool operator==(const GramMatrix &other) const {
        return entries_ == other.entries_;
    }
    bool operator!=(const GramMatrix &other) const {
        return !(*this == other);
    }

   private:
    GramMatrix(IntMatrix entries, Integer det) : entries_(std::move(entries)), det_(std::move(det)) {
    }

    IntMatrix entries_;
    Integer det_;
};

inline GramMatrix check_gram(IntMatrix entries) {
    return GramMatrix::check(std::move(entries));
}

/// left * input * right = diag(diagonal), with left and right unimodular and
/// diagonal[i] | diagonal[i + 1].
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix right;
    std::vector<Integer> diagonal;
};

SmithDecomposition smith_normal_form(const IntMatrix &m);
SmithDecomposition smith_normal_form(const GramMatrix &b);

/// Componentwise reduction into [0, 1)^n.
RationalVector normalize_mod1(const RationalVector &v);

/// The finite abelian group B^-1 Z^n / Z^n. Elements are stored by their unique
/// representative in [0,1)^n, sorted lexicographically (zero first). Element
/// indices are the label indices of the associated modular data.
class DiscriminantGroup {
   public:
    std::size_t order() const {
        return representatives_.size();
    }
    const std::vector<RationalVector> &representatives() const {
        return representatives_;
    }
    const RationalVector &operator[](std::size_t i) const {
        return representatives_[i];
    }
    /// Invariant factors greater than one, in divisibility order.
    const std::vector<Integer> &invariant_factors() const {
        return invariant_factors_;
    }

    /// Index of the class of v (any representative), if v lies in B^-1 Z^n.
    std::optional<std::size_t> index_of(const RationalVector &v) const;
    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t negate(std::size_t a) const;

   private:
    friend DiscriminantGroup discriminant_group(const GramMatrix &b);

    std::vector<RationalVector> representatives_;
    std::vector<Integer> invariant_factors_;
    std::map<RationalVector, std::size_t> index_;
};

DiscriminantGroup discriminant_group(const GramMatrix &b);

/// True iff b * v is integral.
bool in_discriminant_group(const GramMatrix &b, const RationalVector &v);

/// v^T B w mod 1, in [0, 1). Throws NotInDiscriminantGroup unless Bv, Bw are integral.
Rational bilinear_mod1(const GramMatrix &b, const RationalVector &v, const RationalVector &w);

/// v^T B v mod 2, in [0, 2). Throws NotInDiscriminantGroup unless Bv is integral.
Rational quadratic_mod2(const GramMatrix &b, const RationalVector &v);

}  // namespace modlat

#endif
