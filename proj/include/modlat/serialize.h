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

#ifndef MODLAT_SERIALIZE_H
#define MODLAT_SERIALIZE_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "modlat/cyclotomic.h"
#include "modlat/lattice.h"
#include "modlat/modular_data.h"

namespace modlat {

/// Malformed text. Line and column are 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {
    }
    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed text whose content violates a type invariant.
class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses one value of the grammar
///   value := ['+'|'-'] term (('+'|'-') term)*
///   term  := RAT ['*' root] | root
///   root  := 'e(' RAT ')'
///   RAT   := ['-'] digits ['/' digits]
/// `line` is only used for error positions.
Cyclotomic parse_cyclotomic(std::string_view text, std::size_t line = 1);
Rational parse_rational(std::string_view text, std::size_t line = 1);

/// Plain integer matrix: one row per line, whitespace-separated integers,
/// blank lines and '#' comments ignored.
IntMatrix parse_int_matrix(std::string_view text);
std::string format_int_matrix(const IntMatrix &m);
/// parse_int_matrix followed by check_gram; invariant failures become ValidationError.
GramMatrix parse_gram_matrix(std::string_view text);

enum class DocumentKind { GramMatrix, ModularData, Link, Report };

using Document = std::variant<GramMatrix, ModularData, FramedLink, Report>;

std::string serialize(const GramMatrix &b);
std::string serialize(const ModularData &md);
std::string serialize(const FramedLink &link);
std::string serialize(const Report &report);
std::string serialize(const Document &doc);

DocumentKind document_kind(std::string_view text);
Document parse_document(std::string_view text);
ModularData parse_modular_data(std::string_view text);
FramedLink parse_link(std::string_view text);
Report parse_report(std::string_view text);

}  // namespace modlat

#endif
