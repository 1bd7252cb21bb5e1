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

#include "modlat/modular_data.h"

#include <algorithm>
#include <numeric>

namespace modlat {

namespace {

using Kind = ModularDataError::Kind;

void check_structure(const Matrix<Cyclotomic> &s, const std::vector<Cyclotomic> &twists) {
    if (twists.empty()) {
        throw ModularDataError(Kind::InvalidData, "modular data must have rank at least 1");
    }
    if (!s.is_square() || s.rows() != twists.size()) {
        throw ModularDataError(Kind::InvalidData, "S~ must be a rank x rank matrix");
    }
    if (!s.is_symmetric()) {
        throw ModularDataError(Kind::InvalidData, "S~ is not symmetric");
    }
    if (s(0, 0) != Cyclotomic(1L)) {
        throw ModularDataError(Kind::InvalidData, "S~[0][0] must be 1");
    }
    if (twists[0] != Cyclotomic(1L)) {
        throw ModularDataError(Kind::InvalidData, "twist of the unit must be 1");
    }
    for (std::size_t i = 0; i < twists.size(); i++) {
        if (!twists[i].root_exponent()) {
            throw ModularDataError(Kind::InvalidData, "twist " + std::to_string(i) + " is not a root of unity");
        }
    }
}

void check_label(const ModularData &md, Label l) {
    if (l >= md.rank()) {
        throw ModularDataError(Kind::BadLabel,
                               "label " + std::to_string(l) + " out of range for rank " + std::to_string(md.rank()));
    }
}

}  // namespace

ModularData::ModularData(Matrix<Cyclotomic> s_tilde, std::vector<Cyclotomic> twists,
                         std::vector<std::string> label_names)
    : s_tilde_(std::move(s_tilde)), twists_(std::move(twists)), label_names_(std::move(label_names)) {
    check_structure(s_tilde_, twists_);
    if (!label_names_.empty() && label_names_.size() != twists_.size()) {
        throw ModularDataError(Kind::InvalidData, "label names must be absent or one per label");
    }
    if (!is_nonsingular(s_tilde_)) {
        throw ModularDataError(Kind::InvalidData, "S~ is degenerate");
    }
}

ModularData::ModularData(Trusted, Matrix<Cyclotomic> s_tilde, std::vector<Cyclotomic> twists)
    : s_tilde_(std::move(s_tilde)), twists_(std::move(twists)) {
    check_structure(s_tilde_, twists_);
}

Matrix<Cyclotomic> ModularData::t_matrix() const {
    Matrix<Cyclotomic> t(rank(), rank());
    for (std::size_t i = 0; i < rank(); i++) {
        t(i, i) = twists_[i];
    }
    return t;
}

bool ModularData::same_data(const ModularData &other) const {
    if (rank() != other.rank() || !equal(s_tilde_, other.s_tilde_)) {
        return false;
    }
    for (std::size_t i = 0; i < rank(); i++) {
        if (twists_[i] != other.twists_[i]) {
            return false;
        }
    }
    return true;
}

bool ModularData::operator==(const ModularData &other) const {
    return same_data(other) && label_names_ == other.label_names_ && provenance_ == other.provenance_;
}

ModularData ModularData::with_names(std::vector<std::string> names) const {
    if (!names.empty() && names.size() != rank()) {
        throw ModularDataError(Kind::InvalidData, "label names must be absent or one per label");
    }
    ModularData out = *this;
    out.label_names_ = std::move(names);
    return out;
}

ModularData from_lattice(const GramMatrix &b) {
    auto group = std::make_shared<const DiscriminantGroup>(discriminant_group(b));
    const std::size_t n = group->order();
    Matrix<Rational> pairing(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            pairing(i, j) = bilinear_mod1(b, (*group)[i], (*group)[j]);
            pairing(j, i) = pairing(i, j);
        }
    }
    for (std::size_t i = 1; i < n; i++) {
        auto row = pairing.row(i);
        if (std::all_of(row.begin(), row.end(), [](const Rational &x) { return sgn(x) == 0; })) {
            throw std::logic_error("discriminant form is degenerate");
        }
    }
    Matrix<Cyclotomic> s(n, n);
    std::vector<Cyclotomic> twists;
    twists.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            s(i, j) = Cyclotomic::root_of_unity(pairing(i, j));
        }
        twists.push_back(Cyclotomic::root_of_unity(quadratic_mod2(b, (*group)[i]) / 2));
    }
    ModularData md(ModularData::Trusted{}, std::move(s), std::move(twists));
    md.provenance_ = b;
    md.group_ = std::move(group);
    return md;
}

GramMatrix direct_sum(const GramMatrix &a, const GramMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    IntMatrix m(na + nb, na + nb, Integer(0));
    for (std::size_t i = 0; i < na; i++) {
        for (std::size_t j = 0; j < na; j++) {
            m(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < nb; i++) {
        for (std::size_t j = 0; j < nb; j++) {
            m(na + i, na + j) = b(i, j);
        }
    }
    return GramMatrix::check(std::move(m));
}

ModularData product(const ModularData &a, const ModularData &b) {
    const std::size_t na = a.rank();
    const std::size_t nb = b.rank();
    Matrix<Cyclotomic> s(na * nb, na * nb);
    std::vector<Cyclotomic> twists;
    for (std::size_t i = 0; i < na; i++) {
        for (std::size_t j = 0; j < nb; j++) {
            twists.push_back(a.twists()[i] * b.twists()[j]);
            for (std::size_t k = 0; k < na; k++) {
                for (std::size_t l = 0; l < nb; l++) {
                    s(i * nb + j, k * nb + l) = a.s_tilde()(i, k) * b.s_tilde()(j, l);
                }
            }
        }
    }
    return ModularData(std::move(s), std::move(twists));
}

std::vector<Cyclotomic> quantum_dimensions(const ModularData &md) {
    return md.s_tilde().row(0);
}

GaussData gauss_data(const ModularData &md) {
    GaussData g{Cyclotomic(), Cyclotomic(), Cyclotomic(), false};
    for (std::size_t i = 0; i < md.rank(); i++) {
        const Cyclotomic &d = md.s_tilde()(0, i);
        Cyclotomic d2 = d * d;
        g.d_squared += d2;
        g.p_plus += md.twists()[i] * d2;
        g.p_minus += md.twists()[i].conjugate() * d2;
    }
    g.identity_holds = (g.p_plus * g.p_minus - g.d_squared).is_zero();
    return g;
}

FusionTensor verlinde_fusion(const ModularData &md) {
    const std::size_t n = md.rank();
    const auto &s = md.s_tilde();
    Cyclotomic d_squared = gauss_data(md).d_squared;
    if (d_squared.is_zero()) {
        throw ModularDataError(Kind::NotModular, "global dimension is zero");
    }
    Cyclotomic inv_d_squared = d_squared.inverse();

    std::vector<Cyclotomic> inv_dim(n);
    Matrix<Cyclotomic> conj(n, n);
    for (std::size_t a = 0; a < n; a++) {
        if (s(0, a).is_zero()) {
            throw ModularDataError(Kind::NotModular, "quantum dimension " + std::to_string(a) + " is zero");
        }
        inv_dim[a] = s(0, a).inverse();
        for (std::size_t k = 0; k < n; k++) {
            conj(k, a) = s(k, a).conjugate();
        }
    }
    uint32_t conductor = std::lcm(common_conductor(s), inv_d_squared.conductor());
    for (const auto &x : inv_dim) {
        conductor = std::lcm(conductor, x.conductor());
    }

    FusionTensor ft(n);
    CyclotomicAccumulator acc(conductor);
    std::vector<Cyclotomic> weights(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            for (std::size_t a = 0; a < n; a++) {
                weights[a] = s(i, a) * s(j, a) * inv_dim[a];
            }
            for (std::size_t k = 0; k < n; k++) {
                acc.clear();
                for (std::size_t a = 0; a < n; a++) {
                    acc.add_product(weights[a], conj(k, a));
                }
                Cyclotomic value = acc.value() * inv_d_squared;
                auto r = value.as_rational();
                if (!r || r->get_den() != 1 || sgn(*r) < 0 || !r->get_num().fits_ulong_p()) {
                    throw ModularDataError(Kind::NonIntegralFusion,
                                           "N_{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
                                               std::to_string(k) + " = " + value.str() +
                                               " is not a non-negative integer");
                }
                ft(i, j, k) = r->get_num().get_ui();
                ft(j, i, k) = ft(i, j, k);
            }
        }
    }
    return ft;
}

Matrix<Integer> fusion_matrix(const FusionTensor &ft, Label i) {
    const std::size_t n = ft.rank();
    if (i >= n) {
        throw ModularDataError(Kind::BadLabel, "label out of range");
    }
    Matrix<Integer> m(n, n);
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = 0; k < n; k++) {
            m(j, k) = static_cast<unsigned long>(ft(i, j, k));
        }
    }
    return m;
}

std::vector<Outcome> fusion_probabilities(const ModularData &md, const FusionTensor &ft, Label i, Label j) {
    check_label(md, i);
    check_label(md, j);
    if (ft.rank() != md.rank()) {
        throw ModularDataError(Kind::InvalidData, "fusion tensor rank does not match the data");
    }
    auto dim = [&](Label l) {
        auto r = md.s_tilde()(0, l).as_rational();
        if (!r || sgn(*r) <= 0) {
            throw ModularDataError(Kind::NotProbabilistic,
                                   "quantum dimension of label " + std::to_string(l) + " is not a positive rational");
        }
        return *r;
    };
    const Rational denom = dim(i) * dim(j);
    std::vector<Outcome> out;
    Rational total = 0;
    for (Label k = 0; k < md.rank(); k++) {
        uint64_t mult = ft(i, j, k);
        if (mult == 0) {
            continue;
        }
        Rational p = Rational(Integer(static_cast<unsigned long>(mult))) * dim(k) / denom;
        p.canonicalize();
        total += p;
        out.push_back({k, p});
    }
    if (total != 1) {
        throw ModularDataError(Kind::NotProbabilistic, "fusion outcome weights sum to " + to_string(total));
    }
    return out;
}

std::vector<Label> dual_permutation(const ModularData &md) {
    const std::size_t n = md.rank();
    Cyclotomic d_squared = gauss_data(md).d_squared;
    if (d_squared.is_zero()) {
        throw ModularDataError(Kind::NotModular, "global dimension is zero");
    }
    Matrix<Cyclotomic> c = scale(md.s_tilde() * md.s_tilde(), d_squared.inverse());
    std::vector<Label> perm(n, n);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            auto r = c(i, j).as_rational();
            if (!r || (*r != 0 && *r != 1)) {
                throw ModularDataError(Kind::NotModular, "S~^2 / D^2 has a non-0/1 entry at (" +
                                                             std::to_string(i) + ", " + std::to_string(j) + ")");
            }
            if (*r == 1) {
                if (perm[i] != n || hit[j]) {
                    throw ModularDataError(Kind::NotModular, "S~^2 / D^2 is not a permutation matrix");
                }
                perm[i] = j;
                hit[j] = true;
            }
        }
        if (perm[i] == n) {
            throw ModularDataError(Kind::NotModular, "S~^2 / D^2 has an empty row");
        }
    }
    return perm;
}

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

const CheckResult *Report::find(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

Report check_modular_relations(const ModularData &md) {
    const std::size_t n = md.rank();
    const auto &s = md.s_tilde();
    Report report;

    {
        bool ok = md.twists()[0] == Cyclotomic(1L);
        for (const auto &t : md.twists()) {
            ok = ok && t.root_exponent().has_value();
        }
        report.checks.push_back({relation::kTwistUnit, ok, ok ? "" : "twists[0] != 1 or a twist is not a root of unity"});
    }
    report.checks.push_back({relation::kSymmetric, s.is_symmetric(), ""});

    std::optional<std::vector<Label>> perm;
    try {
        perm = dual_permutation(md);
        report.checks.push_back({relation::kChargeConjugation, true, ""});
    } catch (const ModularDataError &e) {
        report.checks.push_back({relation::kChargeConjugation, false, e.what()});
    }

    if (perm) {
        bool ok = (*perm)[0] == 0;
        for (std::size_t i = 0; i < n; i++) {
            ok = ok && (*perm)[(*perm)[i]] == i;
        }
        report.checks.push_back({relation::kInvolution, ok, ok ? "" : "C is not an involution fixing the unit"});
    } else {
        report.checks.push_back({relation::kInvolution, false, "C undefined"});
    }

    if (perm) {
        Matrix<Cyclotomic> st = s * md.t_matrix();
        Matrix<Cyclotomic> st3 = (st * st) * st;
        Matrix<Cyclotomic> s2 = s * s;
        Cyclotomic p_plus = gauss_data(md).p_plus;
        Matrix<Cyclotomic> rhs(n, n);
        // (S~^2 C)_{ik} = (S~^2)_{i, C^-1(k)}
        std::vector<Label> inverse(n);
        for (std::size_t i = 0; i < n; i++) {
            inverse[(*perm)[i]] = i;
        }
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t k = 0; k < n; k++) {
                rhs(i, k) = p_plus * s2(i, inverse[k]);
            }
        }
        bool ok = equal(st3, rhs);
        report.checks.push_back({relation::kModular, ok, ok ? "" : "(S~T)^3 differs from p+ S~^2 C"});
    } else {
        report.checks.push_back({relation::kModular, false, "C undefined"});
    }
    return report;
}

Report verify(const ModularData &md) {
    Report report;
    GaussData g = gauss_data(md);
    report.checks.push_back({relation::kGauss, g.identity_holds,
                             g.identity_holds ? ""
                                              : "p+ p- = " + (g.p_plus * g.p_minus).str() + ", D^2 = " +
                                                    g.d_squared.str()});

    const std::size_t n = md.rank();
    Matrix<Cyclotomic> lhs = md.s_tilde() * conjugate_transpose(md.s_tilde());
    Matrix<Cyclotomic> rhs = scale(Matrix<Cyclotomic>::identity(n, Cyclotomic(1L)), g.d_squared);
    bool unitary = equal(lhs, rhs);
    report.checks.push_back({relation::kUnitarity, unitary, ""});

    try {
        verlinde_fusion(md);
        report.checks.push_back({relation::kVerlinde, true, ""});
    } catch (const ModularDataError &e) {
        report.checks.push_back({relation::kVerlinde, false, e.what()});
    }

    Report rel = check_modular_relations(md);
    report.checks.insert(report.checks.end(), rel.checks.begin(), rel.checks.end());
    return report;
}

FramedLink::FramedLink(Matrix<Integer> linking, std::vector<Label> colors)
    : linking_(std::move(linking)), colors_(std::move(colors)) {
    if (!linking_.is_square() || linking_.rows() != colors_.size()) {
        throw ModularDataError(Kind::InvalidData, "linking matrix must be m x m for m colored components");
    }
    if (!linking_.is_symmetric()) {
        throw ModularDataError(Kind::InvalidData, "linking matrix is not symmetric");
    }
}

FramedLink FramedLink::hopf(Label a, Label b) {
    return FramedLink(Matrix<Integer>{{0, 1}, {1, 0}}, {a, b});
}

FramedLink FramedLink::unknot(Label a, long framing) {
    return FramedLink(Matrix<Integer>{{Integer(framing)}}, {a});
}

Cyclotomic colored_link_invariant(const ModularData &md, const FramedLink &link) {
    const DiscriminantGroup *g = md.group();
    if (g == nullptr || !md.provenance()) {
        throw ModularDataError(Kind::NoLatticeProvenance,
                               "colored link invariants need data constructed from a Gram matrix");
    }
    const GramMatrix &b = *md.provenance();
    for (Label c : link.colors()) {
        check_label(md, c);
    }
    Rational exponent = 0;
    const auto &l = link.linking();
    for (std::size_t i = 0; i < link.components(); i++) {
        const auto &vi = (*g)[link.colors()[i]];
        exponent += Rational(l(i, i)) * quadratic_mod2(b, vi) / 2;
        for (std::size_t j = i + 1; j < link.components(); j++) {
            exponent += Rational(l(i, j)) * bilinear_mod1(b, vi, (*g)[link.colors()[j]]);
        }
    }
    return Cyclotomic::root_of_unity(exponent);
}

ModularData relabel(const ModularData &md, const std::vector<Label> &perm) {
    const std::size_t n = md.rank();
    std::vector<Label> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Label> iota(n);
    std::iota(iota.begin(), iota.end(), Label{0});
    if (sorted != iota || perm[0] != 0) {
        throw ModularDataError(Kind::InvalidData, "relabeling must be a permutation fixing label 0");
    }
    Matrix<Cyclotomic> s(n, n);
    std::vector<Cyclotomic> twists(n);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; i++) {
        twists[i] = md.twists()[perm[i]];
        if (!md.label_names().empty()) {
            names.push_back(md.label_names()[perm[i]]);
        }
        for (std::size_t j = 0; j < n; j++) {
            s(i, j) = md.s_tilde()(perm[i], perm[j]);
        }
    }
    return ModularData(std::move(s), std::move(twists), std::move(names));
}

std::string canonical_form(const ModularData &md, std::size_t rank_bound) {
    const std::size_t n = md.rank();
    if (n > rank_bound) {
        throw ModularDataError(Kind::RankTooLarge, "rank " + std::to_string(n) + " exceeds the canonical-form bound " +
                                                       std::to_string(rank_bound));
    }
    std::vector<std::string> twist(n);
    Matrix<std::string> entry(n, n);
    std::vector<std::string> distinct;
    for (std::size_t i = 0; i < n; i++) {
        twist[i] = md.twists()[i].root_str();
        for (std::size_t j = i; j < n; j++) {
            entry(i, j) = md.s_tilde()(i, j).str();
            entry(j, i) = entry(i, j);
            distinct.push_back(entry(i, j));
        }
    }
    // Integer ids that order like the strings.
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Matrix<std::size_t> id(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            id(i, j) = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), entry(i, j)) -
                                                distinct.begin());
        }
    }

    // Key: the twist sequence, then the lower triangle of S~ row by row. The
    // minimal twist sequence is the sorted one, so position k only admits
    // labels with the k-th sorted twist. Row k of the triangle depends only on
    // the first k + 1 positions, which lets partial relabelings be pruned.
    std::vector<Label> order(n);
    std::iota(order.begin(), order.end(), Label{0});
    std::stable_sort(order.begin() + 1, order.end(), [&](Label a, Label b) { return twist[a] < twist[b]; });

    std::vector<Label> cur(n, 0);
    std::vector<Label> best;
    std::vector<std::vector<std::size_t>> best_rows(n);  // empty row: not yet known
    std::vector<bool> used(n, false);
    used[0] = true;
    best_rows[0] = {id(0, 0)};
    auto search = [&](auto &&self, std::size_t k) -> void {
        if (k == n) {
            best = cur;
            return;
        }
        for (Label c = 1; c < n; c++) {
            if (used[c] || twist[c] != twist[order[k]]) {
                continue;
            }
            std::vector<std::size_t> row(k + 1);
            for (std::size_t j = 0; j < k; j++) {
                row[j] = id(c, cur[j]);
            }
            row[k] = id(c, c);
            if (!best_rows[k].empty() && row > best_rows[k]) {
                continue;
            }
            if (best_rows[k].empty() || row < best_rows[k]) {
                // Every completion of this prefix beats the recorded best.
                best_rows[k] = std::move(row);
                for (std::size_t r = k + 1; r < n; r++) {
                    best_rows[r].clear();
                }
            }
            cur[k] = c;
            used[c] = true;
            self(self, k + 1);
            used[c] = false;
        }
    };
    search(search, 1);

    std::string out = "twists:";
    for (std::size_t i = 0; i < n; i++) {
        out += (i == 0 ? " " : ", ") + twist[best[i]];
    }
    out += "\ns_tilde:";
    for (std::size_t i = 0; i < n; i++) {
        out += i == 0 ? " " : "; ";
        for (std::size_t j = 0; j < n; j++) {
            out += (j == 0 ? "" : ", ") + entry(best[i], best[j]);
        }
    }
    out += "\n";
    return out;
}

}  // namespace modlat
