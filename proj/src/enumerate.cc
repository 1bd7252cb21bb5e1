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

#include "modlat/enumerate.h"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace modlat {

std::vector<GramMatrix> generate_gram_matrices(const CorpusSpec &spec) {
    if (spec.max_dim == 0 || spec.max_entry <= 0 || (spec.max_rank && *spec.max_rank <= 0)) {
        throw std::invalid_argument("corpus bounds must be positive");
    }
    std::vector<long> all_values;
    std::vector<long> even_values;
    for (long x = -spec.max_entry; x <= spec.max_entry; x++) {
        all_values.push_back(x);
        if (x % 2 == 0) {
            even_values.push_back(x);
        }
    }

    std::vector<GramMatrix> out;
    for (std::size_t n = 1; n <= spec.max_dim; n++) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = i; j < n; j++) {
                slots.emplace_back(i, j);
            }
        }
        auto choices = [&](std::size_t s) -> const std::vector<long> & {
            return slots[s].first == slots[s].second ? even_values : all_values;
        };
        // Row-major order of the upper triangle; the lower triangle repeats
        // earlier entries, so this odometer is lexicographic on full matrices.
        std::vector<std::size_t> digit(slots.size(), 0);
        auto advance = [&] {
            for (std::size_t s = slots.size(); s-- > 0;) {
                if (++digit[s] < choices(s).size()) {
                    return true;
                }
                digit[s] = 0;
            }
            return false;
        };
        do {
            IntMatrix m(n, n);
            for (std::size_t s = 0; s < slots.size(); s++) {
                auto [i, j] = slots[s];
                m(i, j) = choices(s)[digit[s]];
                m(j, i) = m(i, j);
            }
            Integer det = determinant(m);
            if (det != 0 && (!spec.max_rank || abs(det) <= *spec.max_rank)) {
                out.push_back(GramMatrix::check(std::move(m)));
            }
        } while (advance());
    }
    return out;
}

bool corpus_less(const GramMatrix &a, const GramMatrix &b) {
    if (a.dim() != b.dim()) {
        return a.dim() < b.dim();
    }
    return a.entries().data() < b.entries().data();
}

std::size_t Classification::class_count(std::size_t rank) const {
    auto it = by_rank.find(rank);
    return it == by_rank.end() ? 0 : it->second.size();
}

namespace {

struct Entry {
    std::size_t rank;
    std::string key;
    std::vector<std::string> twists;
    std::size_t index;
};

std::vector<Entry> classify_slice(const std::vector<GramMatrix> &corpus, std::size_t start, std::size_t stride,
                                  std::size_t rank_bound) {
    std::vector<Entry> out;
    for (std::size_t i = start; i < corpus.size(); i += stride) {
        ModularData md = from_lattice(corpus[i]);
        std::vector<std::string> twists;
        for (const auto &t : md.twists()) {
            twists.push_back(t.root_str());
        }
        std::sort(twists.begin(), twists.end());
        out.push_back({md.rank(), canonical_form(md, rank_bound), std::move(twists), i});
    }
    return out;
}

}  // namespace

Classification classify(const std::vector<GramMatrix> &corpus, std::size_t rank_bound, unsigned threads) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, corpus.size())));

    std::vector<std::future<std::vector<Entry>>> workers;
    for (unsigned t = 0; t < threads; t++) {
        workers.push_back(std::async(std::launch::async, classify_slice, std::cref(corpus), t, threads, rank_bound));
    }

    std::map<std::size_t, std::map<std::string, ModularClass>> merged;
    for (auto &w : workers) {
        for (auto &e : w.get()) {
            auto &bucket = merged[e.rank];
            auto it = bucket.find(e.key);
            if (it == bucket.end()) {
                bucket.emplace(e.key, ModularClass{e.key, corpus[e.index], std::move(e.twists), 1});
            } else {
                it->second.members++;
                if (corpus_less(corpus[e.index], it->second.witness)) {
                    it->second.witness = corpus[e.index];
                }
            }
        }
    }

    Classification c;
    for (auto &[rank, bucket] : merged) {
        auto &classes = c.by_rank[rank];
        for (auto &[key, cls] : bucket) {
            classes.push_back(std::move(cls));
        }
    }
    return c;
}

namespace {

std::string matrix_literal(const GramMatrix &b) {
    std::string out = "[";
    for (std::size_t i = 0; i < b.dim(); i++) {
        out += i == 0 ? "[" : ",[";
        for (std::size_t j = 0; j < b.dim(); j++) {
            out += (j == 0 ? "" : ",") + b(i, j).get_str();
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace

std::string format_classification(const Classification &c) {
    std::vector<std::vector<std::string>> rows{{"rank", "classes", "witness", "twists"}};
    for (const auto &[rank, classes] : c.by_rank) {
        for (const auto &cls : classes) {
            std::string twists = "{";
            for (std::size_t i = 0; i < cls.twist_multiset.size(); i++) {
                twists += (i == 0 ? "" : ", ") + cls.twist_multiset[i];
            }
            twists += "}";
            rows.push_back({std::to_string(rank), std::to_string(classes.size()), matrix_literal(cls.witness), twists});
        }
    }
    std::vector<std::size_t> width(4, 0);
    for (const auto &r : rows) {
        for (std::size_t i = 0; i < 4; i++) {
            width[i] = std::max(width[i], r[i].size());
        }
    }
    std::ostringstream out;
    for (const auto &r : rows) {
        for (std::size_t i = 0; i < 4; i++) {
            out << r[i];
            if (i + 1 < 4) {
                out << std::string(width[i] - r[i].size() + 2, ' ');
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace modlat
