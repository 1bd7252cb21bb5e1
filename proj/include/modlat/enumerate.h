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

#ifndef MODLAT_ENUMERATE_H
#define MODLAT_ENUMERATE_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modlat/lattice.h"
#include "modlat/modular_data.h"

namespace modlat {

struct CorpusSpec {
    std::size_t max_dim = 1;
    long max_entry = 1;
    std::optional<long> max_rank;
};

/// Every symmetric matrix with even diagonal, entries in [-max_entry, max_entry],
/// dimension 1..max_dim, det != 0 and |det| <= max_rank when set. Ordered by
/// dimension, then lexicographically by row-major entries.
std::vector<GramMatrix> generate_gram_matrices(const CorpusSpec &spec);

/// Dimension first, then row-major lexicographic.
bool corpus_less(const GramMatrix &a, const GramMatrix &b);

struct ModularClass {
    std::string key;  // canonical_form of the class
    GramMatrix witness;
    std::vector<std::string> twist_multiset;
    std::size_t members = 0;
};

struct Classification {
    /// rank -> classes sorted by key.
    std::map<std::size_t, std::vector<ModularClass>> by_rank;

    std::size_t class_count(std::size_t rank) const;
};

/// Groups from_lattice outputs by rank and canonical form. The witness of a
/// class is its corpus_less-minimal member, so the result does not depend on
/// corpus order. Work is spread over `threads` workers (0 = hardware).
Classification classify(const std::vector<GramMatrix> &corpus,
                        std::size_t rank_bound = kDefaultCanonicalRankBound, unsigned threads = 0);

/// Text table: rank, class count, witness matrix, twist multiset.
std::string format_classification(const Classification &c);

}  // namespace modlat

#endif
