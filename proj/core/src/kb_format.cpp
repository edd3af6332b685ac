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

#include "hmknf/kb_format.hpp"

#include <cctype>
#include <sstream>

namespace hmknf {

namespace {

enum class Tok { Atom, Not, Semi, Comma, Impl, Dot, Pipe, Dash, HashClause, End };

struct Token {
    Tok kind;
    std::string text; // atom name for Tok::Atom
    SourceLoc loc;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        SourceLoc loc{line_, col_};
        if (pos_ >= text_.size()) return {Tok::End, "", loc};
        char c = text_[pos_];
        if (c >= 'a' && c <= 'z') {
            std::string word = read_word();
            if (word == "not") return {Tok::Not, "", loc};
            return {Tok::Atom, std::move(word), loc};
        }
        switch (c) {
            case ';': advance(); return {Tok::Semi, "", loc};
            case ',': advance(); return {Tok::Comma, "", loc};
            case '.': advance(); return {Tok::Dot, "", loc};
            case '|': advance(); return {Tok::Pipe, "", loc};
            case '-': advance(); return {Tok::Dash, "", loc};
            case ':':
                advance();
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    advance();
                    return {Tok::Impl, "", loc};
                }
                throw ParseError(loc.line, loc.col, "expected ':-'");
            case '#': {
                advance();
                std::string word = read_word();
                if (word == "clause") return {Tok::HashClause, "", loc};
                throw ParseError(loc.line, loc.col, "unknown directive '#" + word + "'");
            }
            default:
                throw ParseError(loc.line, loc.col, std::string("malformed token starting with '") + c + "'");
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string read_word() {
        std::string word;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            bool word_char = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
            if (!word_char) break;
            word.push_back(c);
            advance();
        }
        return word;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { bump(); }

    KbDocument parse() {
        KbDocument doc;
        while (cur_.kind != Tok::End) {
            if (cur_.kind == Tok::HashClause)
                doc.clauses.push_back(parse_clause());
            else
                doc.rules.push_back(parse_rule());
        }
        return doc;
    }

private:
    void bump() { cur_ = lexer_.next(); }

    Token expect(Tok kind, const char* what) {
        if (cur_.kind != kind) throw ParseError(cur_.loc.line, cur_.loc.col, std::string("expected ") + what);
        Token t = cur_;
        bump();
        return t;
    }

    KbDocument::ParsedRule parse_rule() {
        KbDocument::ParsedRule rule;
        rule.loc = cur_.loc;
        if (cur_.kind == Tok::Impl || cur_.kind == Tok::Dot)
            throw ParseError(cur_.loc.line, cur_.loc.col, "rule with empty head");
        rule.head.push_back(expect(Tok::Atom, "atom").text);
        while (cur_.kind == Tok::Semi) {
            bump();
            rule.head.push_back(expect(Tok::Atom, "atom").text);
        }
        if (cur_.kind == Tok::Impl) {
            bump();
            parse_body_element(rule);
            while (cur_.kind == Tok::Comma) {
                bump();
                parse_body_element(rule);
            }
        }
        expect(Tok::Dot, "'.' terminator");
        return rule;
    }

    void parse_body_element(KbDocument::ParsedRule& rule) {
        if (cur_.kind == Tok::Not) {
            bump();
            rule.body_neg.push_back(expect(Tok::Atom, "atom after 'not'").text);
        } else {
            rule.body_pos.push_back(expect(Tok::Atom, "atom").text);
        }
    }

    KbDocument::ParsedClause parse_clause() {
        KbDocument::ParsedClause clause;
        clause.loc = cur_.loc;
        bump(); // #clause
        if (cur_.kind == Tok::Dot) throw ParseError(cur_.loc.line, cur_.loc.col, "empty clause");
        clause.literals.push_back(parse_literal());
        while (cur_.kind == Tok::Pipe) {
            bump();
            clause.literals.push_back(parse_literal());
        }
        expect(Tok::Dot, "'.' terminator");
        return clause;
    }

    std::pair<std::string, bool> parse_literal() {
        bool positive = true;
        if (cur_.kind == Tok::Dash) {
            positive = false;
            bump();
        }
        return {expect(Tok::Atom, "atom").text, positive};
    }

    Lexer lexer_;
    Token cur_;
};

} // namespace

KbDocument parse_kb(std::string_view text) {
    Parser parser(text);
    KbDocument doc = parser.parse();
    doc.source = std::string(text);
    // Tautology / duplicate-literal validation happens against names here so
    // the error can carry a source position.
    for (const auto& clause : doc.clauses) {
        for (std::size_t i = 0; i < clause.literals.size(); ++i)
            for (std::size_t j = i + 1; j < clause.literals.size(); ++j)
                if (clause.literals[i].first == clause.literals[j].first &&
                    clause.literals[i].second != clause.literals[j].second)
                    throw ParseError(clause.loc.line, clause.loc.col, "tautological clause");
    }
    return doc;
}

KnowledgeBase build_kb(const KbDocument& doc) {
    KnowledgeBaseBuilder b;
    for (const auto& rule : doc.rules) b.add_rule(rule.head, rule.body_pos, rule.body_neg);
    for (const auto& clause : doc.clauses) b.add_clause(clause.literals);
    return b.build();
}

KnowledgeBase kb_from_text(std::string_view text) { return build_kb(parse_kb(text)); }

std::string serialize_kb(const KnowledgeBase& kb) {
    std::ostringstream out;
    const AtomTable& atoms = kb.atoms();
    for (const Rule& r : kb.rules()) {
        bool first = true;
        for (AtomId a : r.head) {
            out << (first ? "" : " ; ") << atoms.name(a);
            first = false;
        }
        if (!r.body_pos.empty() || !r.body_neg.empty()) {
            out << " :- ";
            first = true;
            for (AtomId a : r.body_pos) {
                out << (first ? "" : ", ") << atoms.name(a);
                first = false;
            }
            for (AtomId a : r.body_neg) {
                out << (first ? "" : ", ") << "not " << atoms.name(a);
                first = false;
            }
        }
        out << ".\n";
    }
    for (const Clause& c : kb.ontology().clauses()) {
        out << "#clause ";
        bool first = true;
        for (const Literal& l : c.literals()) {
            out << (first ? "" : " | ") << (l.positive ? "" : "-") << atoms.name(l.atom);
            first = false;
        }
        out << ".\n";
    }
    return out.str();
}

} // namespace hmknf
