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

#ifndef MODLAT_MODULAR_DATA_H
#define MODLAT_MODULAR_DATA_H

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modlat/cyclotomic.h"
#include "modlat/lattice.h"
#include "modlat/matrix.h"

namespace modlat {

/// Index of a simple object; label 0 is the tensor unit.
using Label = std::size_t;

class ModularDataError : public std::runtime_error {
   public:
    enum class Kind {
        InvalidData,
        NonIntegralFusion,
        NotProbabilistic,
        NotModular,
        NoLatticeProvenance,
        RankTooLarge,
        BadLabel,
    };

    ModularDataError(Kind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {
    }
    Kind kind() const {
        return kind_;
    }

   private:
    Kind kind_;
};

/// Rank, unnormalized S-matrix and twists of a modular category, optionally
/// tagged with the Gram matrix it was constructed from.
///
/// The constructor enforces the structural invariants: square symmetric S~
/// with S~[0][0] = 1, twists[0] = 1, every twist a root of unity, and S~
/// nondegenerate. Everything else (d_i, D^2, p+-, fusion) is derived.
class ModularData {
   public:
    ModularData(Matrix<Cyclotomic> s_tilde, std::vector<Cyclotomic> twists,
                std::vector<std::string> label_names = {});

    std::size_t rank() const {
        return twists_.size();
    }
    const Matrix<Cyclotomic> &s_tilde() const {
        return s_tilde_;
    }
    const std::vector<Cyclotomic> &twists() const {
        return twists_;
    }
    /// Display names; empty when none were supplied.
    const std::vector<std::string> &label_names() const {
        return label_names_;
    }
    const std::optional<GramMatrix> &provenance() const {
        return provenance_;
    }
    /// Discriminant group matching the label order; null without provenance.
    const DiscriminantGroup *group() const {
        return group_.get();
    }

    /// Diagonal T-matrix.
    Matrix<Cyclotomic> t_matrix() const;

    /// Exact structural equality of (S~, twists); names and provenance ignored.
    bool same_data(const ModularData &other) const;

    /// same_data plus identical names and provenance.
    bool operator==(const ModularData &other) const;
    bool operator!=(const ModularData &other) const {
        return !(*this == other);
    }

    /// Copy with display names replaced; names must be empty or one per label.
    ModularData with_names(std::vector<std::string> names) const;

   private:
    friend ModularData from_lattice(const GramMatrix &b);
    struct Trusted {};
    ModularData(Trusted, Matrix<Cyclotomic> s_tilde, std::vector<Cyclotomic> twists);

    Matrix<Cyclotomic> s_tilde_;
    std::vector<Cyclotomic> twists_;
    std::vector<std::string> label_names_;
    std::optional<GramMatrix> provenance_;
    std::shared_ptr<const DiscriminantGroup> group_;
};

/// Pointed modular data G_B: labels are the discriminant group of B in
/// canonical order, S~[i][j] = e(<v_i, v_j>_B), theta_i = e(q(v_i) / 2).
ModularData from_lattice(const GramMatrix &b);

/// Block-diagonal join of two Gram matrices.
GramMatrix direct_sum(const GramMatrix &a, const GramMatrix &b);

/// Product data: label (i, j) has index i * rank(b) + j, S~ is the Kronecker
/// product and twists multiply.
ModularData product(const ModularData &a, const ModularData &b);

/// Row 0 of S~.
std::vector<Cyclotomic> quantum_dimensions(const ModularData &md);

struct GaussData {
    Cyclotomic d_squared;
    Cyclotomic p_plus;
    Cyclotomic p_minus;
    bool identity_holds;
};

/// D^2 = sum d_i^2, p+- = sum theta_i^(+-1) d_i^2, and whether p+ p- = D^2.
GaussData gauss_data(const ModularData &md);

/// N[i][j][k] multiplicities of X_k in X_i (x) X_j.
class FusionTensor {
   public:
    explicit FusionTensor(std::size_t rank) : rank_(rank), data_(rank * rank * rank, 0) {
    }

    std::size_t rank() const {
        return rank_;
    }
    uint64_t operator()(Label i, Label j, Label k) const {
        return data_[(i * rank_ + j) * rank_ + k];
    }
    uint64_t &operator()(Label i, Label j, Label k) {
        return data_[(i * rank_ + j) * rank_ + k];
    }
    bool operator==(const FusionTensor &other) const {
        return rank_ == other.rank_ && data_ == other.data_;
    }

   private:
    std::size_t rank_;
    std::vector<uint64_t> data_;
};

/// Verlinde formula N_ij^k = (1/D^2) sum_a S~_ia S~_ja conj(S~_ka) / d_a.
/// Throws NonIntegralFusion unless every entry is a non-negative integer.
FusionTensor verlinde_fusion(const ModularData &md);

/// (N_i)_{j,k} = N_ij^k.
Matrix<Integer> fusion_matrix(const FusionTensor &ft, Label i);

struct Outcome {
    Label label;
    Rational probability;
};

/// P(k | i, j) = N_ij^k d_k / (d_i d_j) over outcomes with N_ij^k > 0.
std::vector<Outcome> fusion_probabilities(const ModularData &md, const FusionTensor &ft, Label i, Label j);

/// Charge conjugation C with S~^2 = D^2 C; perm[i] is the dual of i.
std::vector<Label> dual_permutation(const ModularData &md);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;

    bool operator==(const CheckResult &other) const = default;
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    const CheckResult *find(const std::string &name) const;
    bool operator==(const Report &other) const = default;
};

namespace relation {
inline constexpr const char *kTwistUnit = "T diagonal with T[0][0] = 1";
inline constexpr const char *kSymmetric = "S~ symmetric";
inline constexpr const char *kChargeConjugation = "S~^2 = D^2 C";
inline constexpr const char *kInvolution = "C^2 = I";
inline constexpr const char *kModular = "(S~T)^3 = p+ S~^2 C";
inline constexpr const char *kGauss = "p+ p- = D^2";
inline constexpr const char *kUnitarity = "S~ S~^dagger = D^2 I";
inline constexpr const char *kVerlinde = "Verlinde fusion integral";
}  // namespace relation

/// SL(2, Z) relations: T normalization, symmetry, S~^2 = D^2 C with C a
/// permutation, C^2 = I, and (S~T)^3 = p+ S~^2 C. Failures are report
/// entries, never exceptions.
Report check_modular_relations(const ModularData &md);

/// Everything `verify` runs: Gauss identity, unitarity, Verlinde integrality,
/// then the modular relations.
Report verify(const ModularData &md);

class FramedLink {
   public:
    /// linking[i][i] is the framing of component i; colors has one label per component.
    FramedLink(Matrix<Integer> linking, std::vector<Label> colors);

    std::size_t components() const {
        return colors_.size();
    }
    const Matrix<Integer> &linking() const {
        return linking_;
    }
    const std::vector<Label> &colors() const {
        return colors_;
    }
    bool operator==(const FramedLink &other) const {
        return linking_ == other.linking_ && colors_ == other.colors_;
    }

    static FramedLink hopf(Label a, Label b);
    static FramedLink unknot(Label a, long framing);

   private:
    Matrix<Integer> linking_;
    std::vector<Label> colors_;
};

/// e( sum_i L_ii q(v_ci)/2 + sum_{i<j} L_ij b(v_ci, v_cj) ); empty link -> 1.
/// Only defined for data built by from_lattice (NoLatticeProvenance otherwise).
Cyclotomic colored_link_invariant(const ModularData &md, const FramedLink &link);

inline constexpr std::size_t kDefaultCanonicalRankBound = 8;

/// Lexicographically least serialization of (twists, S~) over relabelings
/// fixing the unit. Equal strings iff the data agree up to such a relabeling.
std::string canonical_form(const ModularData &md, std::size_t rank_bound = kDefaultCanonicalRankBound);

/// Applies a relabeling: new label i is old label perm[i]. perm[0] must be 0.
ModularData relabel(const ModularData &md, const std::vector<Label> &perm);

}  // namespace modlat

#endif
