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

#include "modlat/serialize.h"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "modlat/enumerate.h"
#include "test_util.h"

using namespace modlat;
using modlat::testing::data_path;
using modlat::testing::gram;
using modlat::testing::q;

namespace {

std::string slurp(const std::string &name) {
    std::ifstream in(data_path(name));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename T>
void expect_round_trip(const T &value) {
    std::string text = serialize(value);
    Document doc = parse_document(text);
    ASSERT_TRUE(std::holds_alternative<T>(doc)) << text;
    EXPECT_TRUE(std::get<T>(doc) == value) << text;
    EXPECT_EQ(serialize(doc), text);
}

}  // namespace

TEST(serialize, semion_document) {
    EXPECT_EQ(serialize(from_lattice(gram({{2}}))),
              "kind: modular_data\n"
              "rank: 2\n"
              "twists: e(0/1), e(1/4)\n"
              "s_tilde:\n"
              "  1, 1\n"
              "  1, -1\n"
              "provenance:\n"
              "  2\n");
}

TEST(serialize, trivial_document) {
    EXPECT_EQ(serialize(from_lattice(gram({{0, 1}, {1, 0}}))),
              "kind: modular_data\n"
              "rank: 1\n"
              "twists: e(0/1)\n"
              "s_tilde:\n"
              "  1\n"
              "provenance:\n"
              "  0, 1\n"
              "  1, 0\n");
}

TEST(serialize, gram_matrix) {
    GramMatrix b = gram({{0, 2}, {2, 0}});
    EXPECT_EQ(serialize(b), "# kind: gram_matrix\n0 2\n2 0\n");
    expect_round_trip(b);
    EXPECT_EQ(parse_gram_matrix(slurp("semion.mat")), gram({{2}}));
    EXPECT_EQ(parse_gram_matrix("  2 1 \n\n1   2\n"), gram({{2, 1}, {1, 2}}));
    EXPECT_THROW(parse_gram_matrix("1 0\n0 2\n"), ValidationError);
    EXPECT_THROW(parse_gram_matrix("2 1\n0 2\n"), ValidationError);
    EXPECT_THROW(parse_gram_matrix("2 1\n2\n"), ParseError);
    EXPECT_THROW(parse_gram_matrix("2 x\n"), ParseError);
    EXPECT_THROW(parse_gram_matrix("# nothing\n"), ParseError);
}

TEST(serialize, cyclotomic_values) {
    EXPECT_EQ(parse_cyclotomic("e(1/4)"), e(q(1, 4)));
    EXPECT_EQ(parse_cyclotomic("-1/2*e(1/3) + 3"), Cyclotomic(q(-1, 2)) * e(q(1, 3)) + Cyclotomic(3L));
    EXPECT_EQ(parse_cyclotomic("1 + e(1/5) + e(4/5)"), Cyclotomic(1L) + e(q(1, 5)) + e(q(4, 5)));
    EXPECT_EQ(parse_rational("-7/21"), q(-1, 3));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        Cyclotomic x = modlat::testing::random_cyclotomic(rng, 1 + trial % 30);
        ASSERT_EQ(parse_cyclotomic(x.str()), x) << x.str();
        ASSERT_EQ(parse_cyclotomic(x.str()).str(), x.str());
    }
    for (const char *bad : {"", "e(1/3", "e(1/0)", "1/", "2*", "e 1/3", "1 +", "x", "3/0"}) {
        EXPECT_THROW(parse_cyclotomic(bad), ParseError) << bad;
    }
}

TEST(serialize, parse_error_location) {
    std::string text = "kind: modular_data\nrank: 2\ntwists: e(0/1), e(1/3\ns_tilde:\n  1, 1\n  1, -1\n";
    try {
        parse_modular_data(text);
        FAIL() << "expected ParseError";
    } catch (const ParseError &err) {
        EXPECT_EQ(err.line(), 3u);
        EXPECT_GE(err.column(), 17u);
    }
}

TEST(serialize, hand_written_semion) {
    ModularData md = parse_modular_data(slurp("semion.md"));
    EXPECT_TRUE(md.same_data(from_lattice(gram({{2}}))));
    EXPECT_EQ(md.label_names(), (std::vector<std::string>{"1", "s"}));
    expect_round_trip(md);
    ModularData fib = parse_modular_data(slurp("fibonacci.md"));
    EXPECT_EQ(fib.rank(), 2u);
    expect_round_trip(fib);
}

TEST(serialize, validation_errors) {
    EXPECT_THROW(parse_modular_data("kind: modular_data\nrank: 2\ntwists: e(0/1), e(1/4)\ns_tilde:\n  1, 1\n  -1, -1\n"),
                 ValidationError);
    EXPECT_THROW(parse_modular_data("kind: modular_data\nrank: 2\ntwists: e(0/1), e(1/4)\ns_tilde:\n  1, 1\n  1, 1\n"),
                 ValidationError);
    // Provenance that disagrees with the data.
    EXPECT_THROW(parse_modular_data("kind: modular_data\nrank: 2\ntwists: e(0/1), e(3/4)\ns_tilde:\n  1, 1\n"
                                    "  1, -1\nprovenance:\n  2\n"),
                 ValidationError);
    EXPECT_THROW(parse_modular_data("kind: modular_data\nrank: 2\ntwists: e(0/1), e(1/4)\ns_tilde:\n  1, 1\n"
                                    "  1, -1\ncolor: red\n"),
                 ParseError);
    EXPECT_THROW(parse_modular_data("kind: modular_data\nrank: 2\nrank: 2\ntwists: e(0/1), e(1/4)\ns_tilde:\n"
                                    "  1, 1\n  1, -1\n"),
                 ParseError);
    EXPECT_THROW(parse_modular_data("kind: modular_data\nrank: 2\ntwists: e(0/1)\ns_tilde:\n  1, 1\n  1, -1\n"),
                 ParseError);
    EXPECT_THROW(parse_modular_data("kind: link\ncomponents: 0\nlinking:\ncolors:\n"), ParseError);
    EXPECT_THROW(parse_document("kind: banana\n"), ParseError);
    EXPECT_THROW(parse_document(""), ParseError);
}

TEST(serialize, round_trip_fixtures) {
    for (const auto &b : {gram({{2}}), gram({{0, 2}, {2, 0}}), gram({{2, 1}, {1, 2}}), gram({{2, 0}, {0, 2}}),
                          gram({{-2}}), gram({{0, 1}, {1, 0}})}) {
        expect_round_trip(b);
        expect_round_trip(from_lattice(b));
        expect_round_trip(from_lattice(b).with_names({}));
    }
    expect_round_trip(product(from_lattice(gram({{2}})), from_lattice(gram({{2, 1}, {1, 2}}))));
    expect_round_trip(modlat::testing::corrupted_semion());
    expect_round_trip(verify(modlat::testing::corrupted_semion()));
    expect_round_trip(verify(from_lattice(gram({{2}}))));
    expect_round_trip(FramedLink::hopf(1, 1));
    expect_round_trip(FramedLink::unknot(2, -3));
    expect_round_trip(FramedLink(Matrix<Integer>(0, 0), {}));
    expect_round_trip(Report{});
}

TEST(serialize, round_trip_corpus) {
    for (const auto &b : generate_gram_matrices({2, 4, std::nullopt})) {
        expect_round_trip(b);
        expect_round_trip(from_lattice(b));
    }
}

TEST(serialize, link_document) {
    FramedLink hopf = FramedLink::hopf(1, 1);
    EXPECT_EQ(serialize(hopf), "kind: link\ncomponents: 2\nlinking:\n  0, 1\n  1, 0\ncolors: 1, 1\n");
    EXPECT_THROW(parse_link("kind: link\ncomponents: 2\nlinking:\n  0, 1\n  2, 0\ncolors: 1, 1\n"), ValidationError);
}

TEST(serialize, report_document) {
    Report r{{{"a", true, ""}, {"b", false, "entry (0, 1) differs"}}};
    EXPECT_EQ(serialize(r), "kind: report\npass: a\nfail: b | entry (0, 1) differs\n");
    expect_round_trip(r);
}
