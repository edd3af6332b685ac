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

#include "hmknf/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hmknf/errors.hpp"

namespace hmknf {

namespace {

std::string var_atom(int var, char suffix) {
    return "v" + std::to_string(var) + "_" + suffix;
}

// Maps a signed CNF literal to the atom asserting it: v for v, v{i}_f for ¬v.
std::string literal_atom(int lit) {
    return var_atom(lit > 0 ? lit : -lit, lit > 0 ? 't' : 'f');
}

} // namespace

void validate_cnf(const CnfInstance& cnf) {
    if (cnf.num_vars < 1) throw std::invalid_argument("CNF must declare at least one variable");
    for (const auto& clause : cnf.clauses) {
        if (clause.empty() || clause.size() > 3)
            throw std::invalid_argument("CNF clauses must have 1 to 3 literals");
        for (int lit : clause) {
            if (lit == 0) throw std::invalid_argument("CNF literal must be non-zero");
            int var = lit > 0 ? lit : -lit;
            if (var > cnf.num_vars) throw std::invalid_argument("CNF literal exceeds declared variable count");
        }
    }
}

CnfInstance parse_dimacs(std::string_view text) {
    CnfInstance cnf;
    bool seen_header = false;
    std::size_t declared_clauses = 0;
    std::vector<int> current;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            if (seen_header) throw ParseError(line_no, 1, "duplicate DIMACS header");
            int vars = 0;
            unsigned long clauses = 0;
            char tag[4] = {0};
            if (std::sscanf(line.c_str(), "p %3s %d %lu", tag, &vars, &clauses) != 3 ||
                std::string(tag) != "cnf" || vars < 0)
                throw ParseError(line_no, 1, "malformed DIMACS header (expected 'p cnf VARS CLAUSES')");
            cnf.num_vars = vars;
            declared_clauses = clauses;
            seen_header = true;
            continue;
        }
        if (!seen_header) throw ParseError(line_no, 1, "clause before DIMACS header");
        const char* it = line.data();
        const char* end = line.data() + line.size();
        while (it != end) {
            while (it != end && (*it == ' ' || *it == '\t' || *it == '\r')) ++it;
            if (it == end) break;
            int value = 0;
            auto [next, ec] = std::from_chars(it, end, value);
            if (ec != std::errc())
                throw ParseError(line_no, static_cast<std::size_t>(it - line.data()) + 1,
                                 "expected integer literal in DIMACS clause");
            it = next;
            if (value == 0) {
                cnf.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(value);
            }
        }
    }
    if (!seen_header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing DIMACS header");
    if (!current.empty())
        throw ParseError(line_no, 1, "unterminated DIMACS clause (missing trailing 0)");
    if (cnf.clauses.size() != declared_clauses)
        throw ParseError(line_no, 1, "clause count does not match DIMACS header");
    try {
        validate_cnf(cnf);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, 1, e.what());
    }
    return cnf;
}

KnowledgeBase encode_3sat_normal(const CnfInstance& cnf) {
    validate_cnf(cnf);
    KnowledgeBaseBuilder b;
    // Program first so K-atoms take the low ids: the self-supporting sat
    // rule, then the chooser pair per variable.
    b.add_rule({"sat"}, {"sat"}, {});
    for (int i = 1; i <= cnf.num_vars; ++i) {
        b.add_rule({var_atom(i, 't')}, {}, {var_atom(i, 'f')});
        b.add_rule({var_atom(i, 'f')}, {}, {var_atom(i, 't')});
    }
    // Exactly one of {undefined, false, true} per variable.
    for (int i = 1; i <= cnf.num_vars; ++i) {
        std::string u = var_atom(i, 'u'), f = var_atom(i, 'f'), t = var_atom(i, 't');
        b.add_clause({{u, true}, {f, true}, {t, true}});
        b.add_clause({{u, false}, {f, false}});
        b.add_clause({{u, false}, {t, false}});
        b.add_clause({{f, false}, {t, false}});
    }
    // total ⟺ every variable is defined; total ⊃ sat.
    {
        std::vector<std::pair<std::string, bool>> all_defined;
        for (int i = 1; i <= cnf.num_vars; ++i) all_defined.emplace_back(var_atom(i, 'u'), true);
        all_defined.emplace_back("total", true);
        b.add_clause(std::move(all_defined));
        for (int i = 1; i <= cnf.num_vars; ++i)
            b.add_clause({{"total", false}, {var_atom(i, 'u'), false}});
        b.add_clause({{"total", false}, {"sat", true}});
    }
    // Each CNF clause must hold wherever total does.
    for (const auto& clause : cnf.clauses) {
        std::vector<std::pair<std::string, bool>> image;
        for (int lit : clause) image.emplace_back(literal_atom(lit), true);
        image.emplace_back("total", false);
        b.add_clause(std::move(image));
    }
    return b.build();
}

KnowledgeBase encode_3sat_disjunctive(const CnfInstance& cnf) {
    validate_cnf(cnf);
    std::uint64_t products = 1;
    for (const auto& clause : cnf.clauses) {
        products *= clause.size(); // ≤ 3 each; overflow impossible below the guard
        if (products > (std::uint64_t(1) << 16))
            throw GuardError("disjunctive encoding clause product exceeds 2^16");
    }

    KnowledgeBaseBuilder b;
    b.add_rule({"sat"}, {"sat"}, {});
    for (int i = 1; i <= cnf.num_vars; ++i)
        b.add_rule({var_atom(i, 't'), var_atom(i, 'f')}, {}, {});
    // (false ∨ true) xor undefined, per variable.
    for (int i = 1; i <= cnf.num_vars; ++i) {
        std::string u = var_atom(i, 'u'), f = var_atom(i, 'f'), t = var_atom(i, 't');
        b.add_clause({{f, true}, {t, true}, {u, true}});
        b.add_clause({{f, false}, {u, false}});
        b.add_clause({{t, false}, {u, false}});
    }
    // Choosing both polarities spills into sat.
    for (int i = 1; i <= cnf.num_vars; ++i)
        b.add_clause({{var_atom(i, 'f'), false}, {var_atom(i, 't'), false}, {"sat", true}});
    // (all clauses satisfied ∧ all variables defined) ⊃ sat, distributed
    // into ∏|clause| ontology clauses: pick one literal per CNF clause and
    // negate its image. Tautologies cannot arise (negations hit only v-atom
    // images, positives only the u-atoms and sat).
    std::vector<std::size_t> pick(cnf.clauses.size(), 0);
    for (;;) {
        std::vector<std::pair<std::string, bool>> product;
        for (std::size_t c = 0; c < cnf.clauses.size(); ++c)
            product.emplace_back(literal_atom(cnf.clauses[c][pick[c]]), false);
        for (int i = 1; i <= cnf.num_vars; ++i) product.emplace_back(var_atom(i, 'u'), true);
        product.emplace_back("sat", true);
        b.add_clause(std::move(product));
        std::size_t c = 0;
        while (c < pick.size() && ++pick[c] == cnf.clauses[c].size()) pick[c++] = 0;
        if (c == pick.size()) break;
    }
    return b.build();
}

KnowledgeBase cnf_as_kb(const CnfInstance& cnf) {
    validate_cnf(cnf);
    KnowledgeBaseBuilder b;
    for (const auto& clause : cnf.clauses) {
        // Tautological CNF clauses (x ∨ ¬x ∨ …) are legal 3SAT input but
        // trivially true; drop them rather than reject them.
        bool tautological = false;
        for (int lit : clause)
            if (std::find(clause.begin(), clause.end(), -lit) != clause.end()) tautological = true;
        if (tautological) continue;
        std::vector<std::pair<std::string, bool>> lits;
        for (int lit : clause) lits.emplace_back("x" + std::to_string(lit > 0 ? lit : -lit), lit > 0);
        b.add_clause(std::move(lits));
    }
    return b.build();
}

} // namespace hmknf
