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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every check is exact; there is no numerical tolerance anywhere.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modlat/cli.h"
#include "modlat/enumerate.h"
#include "modlat/serialize.h"

using namespace modlat;

namespace {

struct Verdict {
    bool passed = true;
    std::string detail;

    void fail(const std::string &why) {
        if (passed) {
            detail = why;
        }
        passed = false;
    }
};

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

GramMatrix gram(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.size());
    std::size_t i = 0;
    for (const auto &row : rows) {
        std::size_t j = 0;
        for (long x : row) {
            m(i, j++) = x;
        }
        i++;
    }
    return GramMatrix::check(std::move(m));
}

std::string literal(const GramMatrix &b) {
    std::string s = "[";
    for (std::size_t i = 0; i < b.dim(); i++) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < b.dim(); j++) {
            s += (j ? "," : "") + b(i, j).get_str();
        }
        s += "]";
    }
    return s + "]";
}

ModularData corrupted_semion() {
    Matrix<Cyclotomic> s{{Cyclotomic(1L), Cyclotomic(1L)}, {Cyclotomic(1L), Cyclotomic(-1L)}};
    return ModularData(std::move(s), {Cyclotomic(1L), Cyclotomic(1L)});
}

int run_cli(const std::vector<std::string> &args, std::string *out = nullptr) {
    std::ostringstream o;
    std::ostringstream e;
    int code = cli::run(args, o, e);
    if (out) {
        *out = o.str();
    }
    return code;
}

const std::vector<GramMatrix> &full_corpus() {
    static const auto corpus = generate_gram_matrices({2, 4, std::nullopt});
    return corpus;
}

Verdict gauss_sweep() {
    Verdict r;
    for (const auto &b : full_corpus()) {
        if (!gauss_data(from_lattice(b)).identity_holds) {
            r.fail("p+ p- != D^2 for " + literal(b));
        }
    }
    r.detail = r.passed ? std::to_string(full_corpus().size()) + " matrices" : r.detail;
    return r;
}

Verdict unitarity_sweep() {
    Verdict r;
    for (const auto &b : full_corpus()) {
        ModularData md = from_lattice(b);
        const auto &s = md.s_tilde();
        if (!s.is_symmetric()) {
            r.fail("S~ not symmetric for " + literal(b));
        }
        for (std::size_t j = 0; j < md.rank(); j++) {
            if (s(0, j) != Cyclotomic(1L)) {
                r.fail("S~[0][j] != 1 for " + literal(b));
            }
        }
        Matrix<Cyclotomic> expected = scale(Matrix<Cyclotomic>::identity(md.rank(), Cyclotomic(1L)),
                                            gauss_data(md).d_squared);
        if (!equal(s * conjugate_transpose(s), expected)) {
            r.fail("S~ S~^dagger != D^2 I for " + literal(b));
        }
    }
    r.detail = r.passed ? std::to_string(full_corpus().size()) + " matrices" : r.detail;
    return r;
}

Verdict fusion_oracle() {
    Verdict r;
    for (const auto &b : full_corpus()) {
        ModularData md = from_lattice(b);
        FusionTensor ft = verlinde_fusion(md);
        for (const auto &d : quantum_dimensions(md)) {
            if (d != Cyclotomic(1L)) {
                r.fail("d_i != 1 for " + literal(b));
            }
        }
        const auto &reps = md.group()->representatives();
        for (Label i = 0; i < md.rank(); i++) {
            for (Label j = 0; j < md.rank(); j++) {
                // Brute force: add representatives, reduce mod 1, search the list.
                RationalVector sum(b.dim());
                for (std::size_t k = 0; k < b.dim(); k++) {
                    sum[k] = reps[i][k] + reps[j][k];
                }
                sum = normalize_mod1(sum);
                Label target = md.rank();
                for (Label k = 0; k < md.rank(); k++) {
                    if (reps[k] == sum) {
                        target = k;
                    }
                }
                for (Label k = 0; k < md.rank(); k++) {
                    if (ft(i, j, k) != (k == target ? 1u : 0u)) {
                        r.fail("N_{" + std::to_string(i) + "," + std::to_string(j) + "}^" + std::to_string(k) +
                               " disagrees with group addition for " + literal(b));
                    }
                }
            }
        }
    }
    r.detail = r.passed ? std::to_string(full_corpus().size()) + " matrices" : r.detail;
    return r;
}

Verdict hopf_consistency() {
    Verdict r;
    auto corpus = generate_gram_matrices({2, 3, std::nullopt});
    std::size_t pairs = 0;
    for (const auto &b : corpus) {
        ModularData md = from_lattice(b);
        for (Label i = 0; i < md.rank(); i++) {
            if (colored_link_invariant(md, FramedLink::unknot(i, 0)) != Cyclotomic(1L)) {
                r.fail("framing-0 unknot != 1 for " + literal(b));
            }
            if (colored_link_invariant(md, FramedLink::unknot(i, 1)) != md.twists()[i]) {
                r.fail("framing-1 unknot != theta for " + literal(b));
            }
            for (Label j = 0; j < md.rank(); j++) {
                pairs++;
                if (colored_link_invariant(md, FramedLink::hopf(i, j)) != md.s_tilde()(i, j)) {
                    r.fail("Hopf link != S~ for " + literal(b));
                }
            }
        }
    }
    r.detail = r.passed ? std::to_string(corpus.size()) + " matrices, " + std::to_string(pairs) + " label pairs"
                        : r.detail;
    return r;
}

Verdict sl2z_relations() {
    Verdict r;
    std::size_t literal_holds = 0;
    std::size_t self_dual = 0;
    for (const auto &b : full_corpus()) {
        ModularData md = from_lattice(b);
        Report rep = check_modular_relations(md);
        for (const char *name : {relation::kModular, relation::kChargeConjugation, relation::kInvolution}) {
            if (!rep.find(name)->passed) {
                r.fail(std::string(name) + " fails for " + literal(b));
            }
        }
        auto c = dual_permutation(md);
        bool trivial_c = true;
        for (Label i = 0; i < md.rank(); i++) {
            trivial_c = trivial_c && c[i] == i;
        }
        self_dual += trivial_c ? 1 : 0;
        Matrix<Cyclotomic> st = md.s_tilde() * md.t_matrix();
        if (equal(st * st * st, scale(md.s_tilde() * md.s_tilde(), gauss_data(md).p_plus))) {
            literal_holds++;
        }
    }
    Report bad = check_modular_relations(corrupted_semion());
    if (bad.find(relation::kModular)->passed) {
        r.fail("corrupted semion passes the modular relation");
    }
    if (r.passed) {
        r.detail = std::to_string(full_corpus().size()) + " matrices, negative control fails; C-free form holds on " +
                   std::to_string(literal_holds) + ", C = I on " + std::to_string(self_dual);
    }
    return r;
}

Verdict representative_independence() {
    Verdict r;
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<long> shift(-3, 3);
    const auto &corpus = full_corpus();
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    for (int trial = 0; trial < 1000; trial++) {
        const GramMatrix &b = corpus[pick(rng)];
        DiscriminantGroup g = discriminant_group(b);
        std::uniform_int_distribution<std::size_t> label(0, g.order() - 1);
        const RationalVector &v = g[label(rng)];
        const RationalVector &w = g[label(rng)];
        RationalVector vz = v;
        RationalVector wz = w;
        for (std::size_t k = 0; k < b.dim(); k++) {
            vz[k] += shift(rng);
            wz[k] += shift(rng);
        }
        if (bilinear_mod1(b, vz, wz) != bilinear_mod1(b, v, w) || quadratic_mod2(b, vz) != quadratic_mod2(b, v)) {
            r.fail("shift changes the form for " + literal(b));
        }
    }
    r.detail = r.passed ? "1000 shifts" : r.detail;
    return r;
}

Verdict fixtures() {
    // Hard-coded from tests/oracles/fixture_oracle.py (BFS over B^-1 columns, no Smith form).
    Verdict r;
    auto check_data = [&](const char *name, const GramMatrix &b, const std::vector<std::vector<Rational>> &s,
                          const std::vector<Rational> &t) {
        ModularData md = from_lattice(b);
        if (md.rank() != t.size()) {
            r.fail(std::string(name) + ": wrong rank");
            return;
        }
        for (std::size_t i = 0; i < t.size(); i++) {
            if (md.twists()[i] != e(t[i])) {
                r.fail(std::string(name) + ": twist " + std::to_string(i));
            }
            for (std::size_t j = 0; j < t.size(); j++) {
                if (md.s_tilde()(i, j) != e(s[i][j])) {
                    r.fail(std::string(name) + ": S~ entry");
                }
            }
        }
    };
    const Rational z = 0;
    const Rational h = q(1, 2);
    check_data("semion", gram({{2}}), {{z, z}, {z, h}}, {z, q(1, 4)});
    check_data("toric code", gram({{0, 2}, {2, 0}}), {{z, z, z, z}, {z, z, h, h}, {z, h, z, h}, {z, h, h, z}},
               {z, z, z, h});
    check_data("Z/3", gram({{2, 1}, {1, 2}}), {{z, z, z}, {z, q(2, 3), q(1, 3)}, {z, q(1, 3), q(2, 3)}},
               {z, q(1, 3), q(1, 3)});
    ModularData semion = from_lattice(gram({{2}}));
    if (semion.s_tilde()(1, 1) != Cyclotomic(-1L) || semion.twists()[1] != e(q(1, 4))) {
        r.fail("semion literal values");
    }
    if (r.passed) {
        r.detail = "semion, toric code, Z/3";
    }
    return r;
}

Verdict classification_echo() {
    Verdict r;
    if (classify({gram({{2}}), gram({{-2}})}).class_count(2) != 2) {
        r.fail("{[[2]],[[-2]]} does not give 2 rank-2 classes");
    }
    if (classify({gram({{0, 2}, {2, 0}}), gram({{2, 0}, {0, 2}})}).class_count(4) != 2) {
        r.fail("toric code and semion x semion do not give 2 rank-4 classes");
    }
    std::vector<GramMatrix> factors = generate_gram_matrices({1, 4, std::nullopt});
    factors.push_back(gram({{0, 1}, {1, 0}}));
    factors.push_back(gram({{2, 1}, {1, 2}}));
    factors.push_back(gram({{0, 2}, {2, 0}}));
    std::size_t pairs = 0;
    for (const auto &a : factors) {
        for (const auto &b : factors) {
            ModularData ma = from_lattice(a);
            ModularData mb = from_lattice(b);
            const std::size_t bound = ma.rank() * mb.rank();
            pairs++;
            if (canonical_form(from_lattice(direct_sum(a, b)), bound) != canonical_form(product(ma, mb), bound)) {
                r.fail("direct sum of " + literal(a) + " and " + literal(b) + " differs from the product");
            }
        }
    }
    if (r.passed) {
        r.detail = "class counts 2 and 2; " + std::to_string(pairs) + " direct sums match Kronecker products";
    }
    return r;
}

Verdict cli_round_trip() {
    Verdict r;
    auto dir = std::filesystem::temp_directory_path() / "modlat_acceptance";
    std::filesystem::create_directories(dir);

    std::vector<Document> docs;
    for (const auto &b : {gram({{2}}), gram({{0, 2}, {2, 0}}), gram({{2, 1}, {1, 2}})}) {
        docs.emplace_back(b);
        docs.emplace_back(from_lattice(b));
    }
    docs.emplace_back(corrupted_semion());
    docs.emplace_back(FramedLink::hopf(1, 1));
    docs.emplace_back(verify(corrupted_semion()));
    for (const auto &d : docs) {
        std::string text = serialize(d);
        Document back = parse_document(text);
        if (serialize(back) != text || back.index() != d.index()) {
            r.fail("round trip changes a fixture");
        }
    }

    std::size_t runs = 0;
    for (std::size_t i = 0; i < full_corpus().size(); i++) {
        auto path = (dir / ("b" + std::to_string(i) + ".md")).string();
        std::ofstream(path) << serialize(from_lattice(full_corpus()[i]));
        std::string first;
        std::string second;
        int code = run_cli({"verify", "--data", path}, &first);
        run_cli({"verify", "--data", path}, &second);
        runs++;
        if (code != cli::kExitOk) {
            r.fail("verify exits " + std::to_string(code) + " on " + literal(full_corpus()[i]));
        }
        if (first != second) {
            r.fail("verify output differs between runs");
        }
    }
    auto bad = (dir / "corrupted.md").string();
    std::ofstream(bad) << serialize(corrupted_semion());
    std::string first;
    std::string second;
    if (run_cli({"verify", "--data", bad}, &first) != cli::kExitVerificationFailed) {
        r.fail("verify does not exit 1 on the corrupted semion");
    }
    run_cli({"verify", "--data", bad}, &second);
    if (first != second || first.find(relation::kModular) == std::string::npos) {
        r.fail("corrupted-semion report is unstable or does not name the relation");
    }
    std::string e1;
    std::string e2;
    run_cli({"enumerate", "--max-dim", "2", "--max-entry", "2"}, &e1);
    run_cli({"enumerate", "--max-dim", "2", "--max-entry", "2"}, &e2);
    if (e1 != e2 || e1.empty()) {
        r.fail("enumerate output differs between runs");
    }
    std::filesystem::remove_all(dir);
    if (r.passed) {
        r.detail = std::to_string(docs.size()) + " fixtures, " + std::to_string(runs) + " verify runs, exit 1 on control";
    }
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"Gauss identity sweep", gauss_sweep},
        {"unitarity and symmetry sweep", unitarity_sweep},
        {"fusion ring vs group addition", fusion_oracle},
        {"Hopf link consistency", hopf_consistency},
        {"SL(2,Z) relations", sl2z_relations},
        {"representative independence", representative_independence},
        {"fixtures", fixtures},
        {"classification echo", classification_echo},
        {"CLI round trip and exit codes", cli_round_trip},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        auto start = std::chrono::steady_clock::now();
        Verdict o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.passed;
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.2fs", secs);
        std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail << ", " << timing << ")\n";
    }
    return all ? 0 : 1;
}
