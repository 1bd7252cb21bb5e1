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

#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace modlat {

namespace {

constexpr std::string_view kGramHeader = "# kind: gram_matrix";
constexpr std::string_view kIndent = "  ";

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 1;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        out.push_back({number++, line});
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
    return out;
}

bool is_blank(std::string_view s) {
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

/// Recursive-descent parser for one cyclotomic value.
class ValueParser {
   public:
    ValueParser(std::string_view text, std::size_t line, std::size_t column_offset)
        : text_(text), line_(line), offset_(column_offset) {
    }

    Cyclotomic parse_value() {
        skip_ws();
        if (at_end()) {
            fail("expected a value");
        }
        Cyclotomic total;
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                sign = peek() == '-' ? -1 : 1;
                pos_++;
            } else if (!first) {
                break;
            }
            Cyclotomic term = parse_term();
            total += sign < 0 ? -term : term;
            first = false;
            skip_ws();
            if (at_end()) {
                break;
            }
            if (peek() != '+' && peek() != '-') {
                fail(std::string("unexpected character '") + peek() + "'");
            }
        }
        return total;
    }

    Rational parse_only_rational() {
        skip_ws();
        Rational r = parse_rational();
        skip_ws();
        if (!at_end()) {
            fail(std::string("unexpected character '") + peek() + "'");
        }
        return r;
    }

   private:
    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(line_, offset_ + pos_ + 1, message);
    }
    bool at_end() const {
        return pos_ >= text_.size();
    }
    char peek() const {
        return text_[pos_];
    }
    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) {
            pos_++;
        }
    }
    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        pos_++;
    }

    Integer parse_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            pos_++;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Rational parse_rational() {
        skip_ws();
        bool negative = false;
        if (!at_end() && peek() == '-') {
            negative = true;
            pos_++;
        }
        Integer num = parse_digits();
        Integer den = 1;
        if (!at_end() && peek() == '/') {
            pos_++;
            std::size_t den_pos = pos_;
            den = parse_digits();
            if (den == 0) {
                pos_ = den_pos;
                fail("zero denominator");
            }
        }
        Rational r(negative ? Integer(-num) : num, den);
        r.canonicalize();
        return r;
    }

    Cyclotomic parse_root() {
        skip_ws();
        if (at_end() || peek() != 'e') {
            fail("expected 'e('");
        }
        pos_++;
        expect('(');
        Rational q = parse_rational();
        expect(')');
        return Cyclotomic::root_of_unity(q);
    }

    Cyclotomic parse_term() {
        skip_ws();
        if (at_end()) {
            fail("expected a term");
        }
        if (peek() == 'e') {
            return parse_root();
        }
        Rational c = parse_rational();
        skip_ws();
        if (!at_end() && peek() == '*') {
            pos_++;
            return Cyclotomic(c) * parse_root();
        }
        return Cyclotomic(c);
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

struct Field {
    std::string_view text;
    std::size_t column;  // 1-based
};

/// Splits on `sep`, trimming spaces; an all-blank input yields no fields.
std::vector<Field> split_fields(std::string_view text, std::size_t column, char sep) {
    std::vector<Field> out;
    if (is_blank(text)) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(sep, start);
        std::string_view piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        std::size_t lead = 0;
        while (lead < piece.size() && piece[lead] == ' ') {
            lead++;
        }
        std::size_t trail = piece.size();
        while (trail > lead && piece[trail - 1] == ' ') {
            trail--;
        }
        out.push_back({piece.substr(lead, trail - lead), column + start + lead});
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

Integer parse_integer_field(const Field &f, std::size_t line) {
    std::string_view s = f.text;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        i++;
    }
    if (i == s.size()) {
        throw ParseError(line, f.column, "expected an integer");
    }
    for (std::size_t k = i; k < s.size(); k++) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            throw ParseError(line, f.column + k, "expected an integer");
        }
    }
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

std::size_t parse_count(const Field &f, std::size_t line) {
    Integer v = parse_integer_field(f, line);
    if (v < 0 || !v.fits_ulong_p()) {
        throw ParseError(line, f.column, "expected a non-negative count");
    }
    return v.get_ui();
}

/// key: value document with indented matrix rows.
struct KeyValue {
    std::size_t line;
    std::size_t value_column;
    std::string_view value;
    std::vector<Line> rows;
};

std::string_view expect_kind(const std::vector<Line> &lines, std::size_t &i) {
    while (i < lines.size() && is_blank(lines[i].text)) {
        i++;
    }
    if (i == lines.size()) {
        throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "empty document");
    }
    std::string_view t = lines[i].text;
    constexpr std::string_view prefix = "kind: ";
    if (t.substr(0, prefix.size()) != prefix) {
        throw ParseError(lines[i].number, 1, "expected 'kind: ...'");
    }
    i++;
    return t.substr(prefix.size());
}

std::map<std::string, KeyValue> read_fields(const std::vector<Line> &lines, std::size_t i,
                                            const std::set<std::string> &allowed) {
    std::map<std::string, KeyValue> out;
    while (i < lines.size()) {
        const Line &l = lines[i];
        if (is_blank(l.text)) {
            i++;
            continue;
        }
        if (l.text.substr(0, kIndent.size()) == kIndent) {
            throw ParseError(l.number, 1, "indented line outside a matrix field");
        }
        std::size_t colon = l.text.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(l.number, 1, "expected 'key: value'");
        }
        std::string key(l.text.substr(0, colon));
        if (allowed.count(key) == 0) {
            throw ParseError(l.number, 1, "unknown key '" + key + "'");
        }
        if (out.count(key) != 0) {
            throw ParseError(l.number, 1, "duplicate key '" + key + "'");
        }
        std::string_view value = l.text.substr(colon + 1);
        std::size_t value_column = colon + 2;
        if (!value.empty() && value[0] == ' ') {
            value.remove_prefix(1);
            value_column++;
        }
        KeyValue kv{l.number, value_column, value, {}};
        i++;
        while (i < lines.size() && lines[i].text.substr(0, kIndent.size()) == kIndent) {
            kv.rows.push_back(lines[i]);
            i++;
        }
        out.emplace(std::move(key), std::move(kv));
    }
    return out;
}

const KeyValue &require(const std::map<std::string, KeyValue> &fields, const std::string &key, std::size_t line) {
    auto it = fields.find(key);
    if (it == fields.end()) {
        throw ParseError(line, 1, "missing key '" + key + "'");
    }
    return it->second;
}

std::vector<Cyclotomic> parse_value_list(std::string_view text, std::size_t line, std::size_t column) {
    std::vector<Cyclotomic> out;
    for (const auto &f : split_fields(text, column, ',')) {
        out.push_back(ValueParser(f.text, line, f.column - 1).parse_value());
    }
    return out;
}

Matrix<Cyclotomic> parse_value_rows(const KeyValue &kv, std::size_t n) {
    if (!is_blank(kv.value)) {
        throw ParseError(kv.line, kv.value_column, "matrix rows must follow on indented lines");
    }
    if (kv.rows.size() != n) {
        throw ParseError(kv.line, 1, "expected " + std::to_string(n) + " matrix rows, found " +
                                         std::to_string(kv.rows.size()));
    }
    Matrix<Cyclotomic> m(n, n);
    for (std::size_t r = 0; r < n; r++) {
        const Line &l = kv.rows[r];
        auto values = parse_value_list(l.text.substr(kIndent.size()), l.number, kIndent.size() + 1);
        if (values.size() != n) {
            throw ParseError(l.number, 1, "expected " + std::to_string(n) + " entries in row");
        }
        for (std::size_t c = 0; c < n; c++) {
            m(r, c) = std::move(values[c]);
        }
    }
    return m;
}

IntMatrix parse_int_rows(const KeyValue &kv, std::size_t n) {
    if (!is_blank(kv.value)) {
        throw ParseError(kv.line, kv.value_column, "matrix rows must follow on indented lines");
    }
    if (kv.rows.size() != n) {
        throw ParseError(kv.line, 1, "expected " + std::to_string(n) + " matrix rows, found " +
                                         std::to_string(kv.rows.size()));
    }
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; r++) {
        const Line &l = kv.rows[r];
        auto fields = split_fields(l.text.substr(kIndent.size()), kIndent.size() + 1, ',');
        if (fields.size() != n) {
            throw ParseError(l.number, 1, "expected " + std::to_string(n) + " entries in row");
        }
        for (std::size_t c = 0; c < n; c++) {
            m(r, c) = parse_integer_field(fields[c], l.number);
        }
    }
    return m;
}

std::string join_values(const std::vector<std::string> &values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); i++) {
        out += (i == 0 ? "" : ", ") + values[i];
    }
    return out;
}

template <typename T, typename F>
std::string format_rows(const Matrix<T> &m, F &&fmt) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); i++) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.cols(); j++) {
            row.push_back(fmt(m(i, j)));
        }
        out += std::string(kIndent) + join_values(row) + "\n";
    }
    return out;
}

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text, std::size_t line) {
    return ValueParser(text, line, 0).parse_value();
}

Rational parse_rational(std::string_view text, std::size_t line) {
    return ValueParser(text, line, 0).parse_only_rational();
}

IntMatrix parse_int_matrix(std::string_view text) {
    std::vector<std::vector<Integer>> rows;
    for (const Line &l : split_lines(text)) {
        std::size_t lead = 0;
        while (lead < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[lead]))) {
            lead++;
        }
        if (lead == l.text.size() || l.text[lead] == '#') {
            continue;
        }
        std::vector<Integer> row;
        std::size_t pos = 0;
        while (pos < l.text.size()) {
            while (pos < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[pos]))) {
                pos++;
            }
            if (pos == l.text.size()) {
                break;
            }
            std::size_t end = pos;
            while (end < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[end]))) {
                end++;
            }
            row.push_back(parse_integer_field({l.text.substr(pos, end - pos), pos + 1}, l.number));
            pos = end;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(l.number, 1, "row has " + std::to_string(row.size()) + " entries, expected " +
                                              std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError(1, 1, "no matrix rows");
    }
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); i++) {
        for (std::size_t j = 0; j < rows[i].size(); j++) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

std::string format_int_matrix(const IntMatrix &m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++) {
            out += (j == 0 ? "" : " ") + m(i, j).get_str();
        }
        out += "\n";
    }
    return out;
}

GramMatrix parse_gram_matrix(std::string_view text) {
    IntMatrix m = parse_int_matrix(text);
    try {
        return GramMatrix::check(std::move(m));
    } catch (const LatticeError &e) {
        throw ValidationError(e.what());
    }
}

std::string serialize(const GramMatrix &b) {
    return std::string(kGramHeader) + "\n" + format_int_matrix(b.entries());
}

std::string serialize(const ModularData &md) {
    std::string out = "kind: modular_data\n";
    out += "rank: " + std::to_string(md.rank()) + "\n";
    if (!md.label_names().empty()) {
        for (const auto &name : md.label_names()) {
            if (name.empty() || name.find_first_of(",\n\r") != std::string::npos || name.front() == ' ' ||
                name.back() == ' ') {
                throw std::invalid_argument("label name '" + name + "' cannot be serialized");
            }
        }
        out += "labels: " + join_values(md.label_names()) + "\n";
    }
    std::vector<std::string> twists;
    for (const auto &t : md.twists()) {
        twists.push_back(t.root_str());
    }
    out += "twists: " + join_values(twists) + "\n";
    out += "s_tilde:\n" + format_rows(md.s_tilde(), [](const Cyclotomic &x) { return x.str(); });
    if (md.provenance()) {
        out += "provenance:\n" + format_rows(md.provenance()->entries(), [](const Integer &x) { return x.get_str(); });
    }
    return out;
}

std::string serialize(const FramedLink &link) {
    std::string out = "kind: link\n";
    out += "components: " + std::to_string(link.components()) + "\n";
    out += "linking:\n" + format_rows(link.linking(), [](const Integer &x) { return x.get_str(); });
    std::vector<std::string> colors;
    for (Label c : link.colors()) {
        colors.push_back(std::to_string(c));
    }
    out += "colors:" + (colors.empty() ? std::string() : " " + join_values(colors)) + "\n";
    return out;
}

std::string serialize(const Report &report) {
    std::string out = "kind: report\n";
    for (const auto &c : report.checks) {
        out += (c.passed ? "pass: " : "fail: ") + c.name;
        if (!c.detail.empty()) {
            out += " | " + c.detail;
        }
        out += "\n";
    }
    return out;
}

std::string serialize(const Document &doc) {
    return std::visit([](const auto &v) { return serialize(v); }, doc);
}

DocumentKind document_kind(std::string_view text) {
    for (const Line &l : split_lines(text)) {
        if (is_blank(l.text)) {
            continue;
        }
        if (l.text == kGramHeader) {
            return DocumentKind::GramMatrix;
        }
        if (l.text == "kind: modular_data") {
            return DocumentKind::ModularData;
        }
        if (l.text == "kind: link") {
            return DocumentKind::Link;
        }
        if (l.text == "kind: report") {
            return DocumentKind::Report;
        }
        throw ParseError(l.number, 1, "unrecognized document kind");
    }
    throw ParseError(1, 1, "empty document");
}

Document parse_document(std::string_view text) {
    switch (document_kind(text)) {
        case DocumentKind::GramMatrix:
            return parse_gram_matrix(text);
        case DocumentKind::ModularData:
            return parse_modular_data(text);
        case DocumentKind::Link:
            return parse_link(text);
        case DocumentKind::Report:
            return parse_report(text);
    }
    throw std::logic_error("unreachable");
}

ModularData parse_modular_data(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    std::string_view kind = expect_kind(lines, i);
    std::size_t kind_line = lines[i - 1].number;
    if (kind != "modular_data") {
        throw ParseError(kind_line, 7, "expected kind modular_data");
    }
    auto fields = read_fields(lines, i, {"rank", "labels", "twists", "s_tilde", "provenance"});

    const KeyValue &rank_kv = require(fields, "rank", kind_line);
    std::size_t n = parse_count({rank_kv.value, rank_kv.value_column}, rank_kv.line);
    if (n == 0) {
        throw ValidationError("rank must be positive");
    }

    const KeyValue &twists_kv = require(fields, "twists", kind_line);
    auto twists = parse_value_list(twists_kv.value, twists_kv.line, twists_kv.value_column);
    if (twists.size() != n) {
        throw ParseError(twists_kv.line, twists_kv.value_column,
                         "expected " + std::to_string(n) + " twists, found " + std::to_string(twists.size()));
    }
    auto s = parse_value_rows(require(fields, "s_tilde", kind_line), n);

    std::vector<std::string> names;
    if (auto it = fields.find("labels"); it != fields.end()) {
        for (const auto &f : split_fields(it->second.value, it->second.value_column, ',')) {
            names.emplace_back(f.text);
        }
        if (names.size() != n) {
            throw ParseError(it->second.line, it->second.value_column,
                             "expected " + std::to_string(n) + " label names");
        }
    }

    std::optional<GramMatrix> provenance;
    if (auto it = fields.find("provenance"); it != fields.end()) {
        const KeyValue &kv = it->second;
        IntMatrix b = parse_int_rows(kv, kv.rows.size());
        try {
            provenance = GramMatrix::check(std::move(b));
        } catch (const LatticeError &e) {
            throw ValidationError(std::string("provenance: ") + e.what());
        }
    }

    try {
        ModularData md(std::move(s), std::move(twists), std::move(names));
        if (provenance) {
            ModularData built = from_lattice(*provenance);
            if (!built.same_data(md)) {
                throw ValidationError("data does not match its provenance matrix");
            }
            return built.with_names(md.label_names());
        }
        return md;
    } catch (const ModularDataError &e) {
        throw ValidationError(e.what());
    }
}

FramedLink parse_link(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    std::string_view kind = expect_kind(lines, i);
    std::size_t kind_line = lines[i - 1].number;
    if (kind != "link") {
        throw ParseError(kind_line, 7, "expected kind link");
    }
    auto fields = read_fields(lines, i, {"components", "linking", "colors"});
    const KeyValue &m_kv = require(fields, "components", kind_line);
    std::size_t m = parse_count({m_kv.value, m_kv.value_column}, m_kv.line);
    IntMatrix linking = parse_int_rows(require(fields, "linking", kind_line), m);
    const KeyValue &c_kv = require(fields, "colors", kind_line);
    std::vector<Label> colors;
    for (const auto &f : split_fields(c_kv.value, c_kv.value_column, ',')) {
        colors.push_back(parse_count(f, c_kv.line));
    }
    if (colors.size() != m) {
        throw ParseError(c_kv.line, c_kv.value_column, "expected " + std::to_string(m) + " colors");
    }
    try {
        return FramedLink(std::move(linking), std::move(colors));
    } catch (const ModularDataError &e) {
        throw ValidationError(e.what());
    }
}

Report parse_report(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    std::string_view kind = expect_kind(lines, i);
    if (kind != "report") {
        throw ParseError(lines[i - 1].number, 7, "expected kind report");
    }
    Report report;
    for (; i < lines.size(); i++) {
        std::string_view t = lines[i].text;
        if (is_blank(t)) {
            continue;
        }
        bool passed;
        if (t.substr(0, 6) == "pass: ") {
            passed = true;
        } else if (t.substr(0, 6) == "fail: ") {
            passed = false;
        } else {
            throw ParseError(lines[i].number, 1, "expected 'pass: ' or 'fail: '");
        }
        t.remove_prefix(6);
        std::size_t bar = t.find(" | ");
        std::string name(t.substr(0, bar));
        std::string detail = bar == std::string_view::npos ? std::string() : std::string(t.substr(bar + 3));
        if (name.empty()) {
            throw ParseError(lines[i].number, 7, "empty check name");
        }
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    }
    return report;
}

}  // namespace modlat
