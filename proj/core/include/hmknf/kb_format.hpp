/*
 *  Copyright (C) 2026  the hmknf contributors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#ifndef HMKNF_KB_FORMAT_HPP
#define HMKNF_KB_FORMAT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hmknf/errors.hpp"
#include "hmknf/kb.hpp"

namespace hmknf {

// Text format, one statement per `.` terminator:
//
//   % comment to end of line
//   h1 ; h2 :- b1, b2, not c1.     % rule (omit `:-` for a fact)
//   #clause a | -b.                % ontology clause, `-` negates
//
// Atom tokens match [a-z][A-Za-z0-9_]*; `not` is reserved.
struct SourceLoc {
    std::size_t line = 0; // 1-based
    std::size_t col = 0;  // 1-based
};

// Parse result before atom interning: rules and clauses by name, each with
// the location of its first token (for diagnostics).
struct KbDocument {
    struct ParsedRule {
        std::vector<std::string> head, body_pos, body_neg;
        SourceLoc loc;
    };
    struct ParsedClause {
        std::vector<std::pair<std::string, bool>> literals; // (atom, positive)
        SourceLoc loc;
    };

    std::string source;
    std::vector<ParsedRule> rules;
    std::vector<ParsedClause> clauses;
};

// Throws ParseError (with 1-based line/col) on malformed tokens, empty
// heads, empty or tautological clauses, and missing `.` terminators.
KbDocument parse_kb(std::string_view text);

// Interns atoms in order of first appearance (rules before ontology
// clauses, each head / positive body / negative body left to right) and
// builds the knowledge base. Tautology errors are reported against the
// offending clause's source location.
KnowledgeBase build_kb(const KbDocument& doc);

// parse + build.
KnowledgeBase kb_from_text(std::string_view text);

// Canonical text form: one statement per line, rules first, set members in
// ascending id order. Parsing the output reproduces an equal KnowledgeBase.
std::string serialize_kb(const KnowledgeBase& kb);

} // namespace hmknf

#endif // HMKNF_KB_FORMAT_HPP
