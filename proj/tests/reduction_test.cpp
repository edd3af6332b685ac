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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "hmknf/reduction.hpp"
#include "hmknf/solver.hpp"
#include "support/test_utils.hpp"

using namespace hmknf;
using namespace hmknf_test;

namespace {

// Independent satisfiability oracle for small CNF instances: plain
// truth-table sweep over the declared variables.
bool cnf_satisfiable(const CnfInstance& cnf) {
    for (unsigned m = 0; m < (1u << cnf.num_vars); ++m) {
        bool all = true;
        for (const auto& clause : cnf.clauses) {
            bool sat = false;
            for (int lit : clause) {
                unsigned var = static_cast<unsigned>(lit > 0 ? lit : -lit) - 1;
                if (((m >> var) & 1u) == (lit > 0 ? 1u : 0u)) sat = true;
            }
            all = all && sat;
        }
        if (all) return true;
    }
    return false;
}

bool some_model_supports(const KnowledgeBase& kb, const std::string& atom) {
    AtomId id = *kb.atoms().find(atom);
    SolveOutcome out = solve(kb, true);
    return std::any_of(out.models.begin(), out.models.end(),
                       [&](const Partition& p) { return p.t().contains(id); });
}

bool gus_discards(const KnowledgeBase& kb, const std::string& atom) {
    Partition empty(AtomSet(kb.universe()), AtomSet(kb.universe()));
    return greatest_unfounded_set(kb, empty).set.contains(*kb.atoms().find(atom));
}

CnfInstance random_cnf(std::mt19937& rng) {
    CnfInstance cnf;
    cnf.num_vars = std::uniform_int_distribution<int>(1, 3)(rng);
    int m = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < m; ++i) {
        std::vector<int> clause;
        int len = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int j = 0; j < len; ++j) {
            int var = std::uniform_int_distribution<int>(1, cnf.num_vars)(rng);
            clause.push_back(std::bernoulli_distribution(0.5)(rng) ? var : -var);
        }
        cnf.clauses.push_back(std::move(clause));
    }
    return cnf;
}

} // namespace

TEST_CASE("DIMACS parsing") {
    SUBCASE("comments, headers and clauses spanning lines") {
        CnfInstance cnf = parse_dimacs("c tiny instance\np cnf 3 2\n1 -2\n3 0\nc mid comment\n-1 2 -3 0\n");
        CHECK(cnf.num_vars == 3);
        REQUIRE(cnf.clauses.size() == 2);
        CHECK(cnf.clauses[0] == std::vector<int>{1, -2, 3});
        CHECK(cnf.clauses[1] == std::vector<int>{-1, 2, -3});
    }
    SUBCASE("rejects malformed input") {
        CHECK_THROWS_AS((void)parse_dimacs(""), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("1 0\np cnf 1 1\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p cnf 1 1\np cnf 1 1\n1 0\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p cnf 1 1\n1\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p cnf 1 2\n1 0\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p cnf 1 1\nx 0\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p cnf 1 1\n1 1 1 1 0\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
    }
    SUBCASE("clause shape validation") {
        CHECK_THROWS_AS(validate_cnf(CnfInstance{0, {}}), std::invalid_argument);
        CHECK_THROWS_AS(validate_cnf(CnfInstance{1, {{}}}), std::invalid_argument);
        CHECK_THROWS_AS(validate_cnf(CnfInstance{1, {{1, 0}}}), std::invalid_argument);
        CHECK_NOTHROW(validate_cnf(CnfInstance{2, {{1, -2}}}));
    }
}

TEST_CASE("normal-rule encoding shape") {
    CnfInstance cnf = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 0\n");
    KnowledgeBase kb = encode_3sat_normal(cnf);
    CHECK(kb.rules().size() == 7);      // self-support + a chooser pair per variable
    CHECK(kb.ka().count() == 7);        // sat + both polarity atoms per variable
    CHECK(kb.atoms().size() == 11);     // + per-variable undefined markers + the totality flag
    CHECK(kb.ontology().clauses().size() == 19);
    CHECK(kb.atoms().find("v1_u").has_value());
    CHECK(kb.atoms().find("total").has_value());
    CHECK(!kb.ka().contains(*kb.atoms().find("v1_u")));
    CHECK(!kb.ka().contains(*kb.atoms().find("total")));
    CHECK(kb.ka().contains(*kb.atoms().find("sat")));
    CHECK(kb.oracle().satisfiable({}));
}

TEST_CASE("disjunctive encoding shape") {
    CnfInstance cnf = parse_dimacs("p cnf 2 2\n1 -2 0\n-1 2 -2 0\n");
    KnowledgeBase kb = encode_3sat_disjunctive(cnf);
    CHECK(kb.rules().size() == 3);      // self-support + one polarity fact per variable
    CHECK(kb.ka().count() == 5);
    CHECK(kb.atoms().size() == 7);      // undefined markers live only in the ontology
    CHECK(kb.ontology().clauses().size() == 14); // 3n xor + n spill + 2*3 distributed
    CHECK(!kb.ka().contains(*kb.atoms().find("v1_u")));
    CHECK(kb.oracle().satisfiable({}));
    SUBCASE("clause product guard") {
        CnfInstance big;
        big.num_vars = 3;
        for (int i = 0; i < 11; ++i) big.clauses.push_back({1, 2, 3});
        CHECK_THROWS_AS((void)encode_3sat_disjunctive(big), GuardError);
    }
}

TEST_CASE("encodings decide satisfiability on hand-picked instances") {
    struct Sample {
        const char* dimacs;
        bool satisfiable;
    };
    const Sample samples[] = {
        {"p cnf 1 1\n1 0\n", true},
        {"p cnf 1 2\n1 0\n-1 0\n", false},
        {"p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n", false},
        {"p cnf 3 1\n1 2 3 0\n", true},
        {"p cnf 2 3\n1 2 0\n-1 2 0\n-2 -2 0\n", false},
        {"p cnf 1 0\n", true},
    };
    for (const Sample& s : samples) {
        CAPTURE(s.dimacs);
        CnfInstance cnf = parse_dimacs(s.dimacs);
        REQUIRE(cnf_satisfiable(cnf) == s.satisfiable);

        KnowledgeBase normal = encode_3sat_normal(cnf);
        CHECK(solve(normal).found == s.satisfiable);
        CHECK(some_model_supports(normal, "sat") == s.satisfiable);
        CHECK(gus_discards(normal, "sat") == !s.satisfiable);

        KnowledgeBase disjunctive = encode_3sat_disjunctive(cnf);
        CHECK(some_model_supports(disjunctive, "sat") == s.satisfiable);
        CHECK(gus_discards(disjunctive, "sat") == !s.satisfiable);
    }
}

TEST_CASE("encodings decide satisfiability on random instances") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 60; ++i) {
        CnfInstance cnf = random_cnf(rng);
        CAPTURE(cnf.num_vars);
        CAPTURE(cnf.clauses.size());
        bool expected = cnf_satisfiable(cnf);

        KnowledgeBase normal = encode_3sat_normal(cnf);
        CHECK(solve(normal).found == expected);
        CHECK(some_model_supports(normal, "sat") == expected);
        CHECK(gus_discards(normal, "sat") == !expected);

        KnowledgeBase disjunctive = encode_3sat_disjunctive(cnf);
        CHECK(some_model_supports(disjunctive, "sat") == expected);
        CHECK(gus_discards(disjunctive, "sat") == !expected);
    }
}

TEST_CASE("upper bound degenerates on the disjunctive encoding") {
    // The polarity facts admit every choice individually, and any joint
    // choice spills into sat through the ontology, so the fixpoint keeps
    // all of KA regardless of the instance's satisfiability.
    for (const char* text : {"p cnf 1 1\n1 0\n", "p cnf 1 2\n1 0\n-1 0\n"}) {
        KnowledgeBase kb = encode_3sat_disjunctive(parse_dimacs(text));
        Partition empty(AtomSet(kb.universe()), AtomSet(kb.universe()));
        CHECK(atmost(kb, empty) == kb.ka());
        UnfoundedReport approx = unfounded_approx(kb, empty);
        CHECK(approx.set.empty());
        CHECK(!approx.exact);
    }
}

TEST_CASE("upper bound separates polarities on the normal encoding") {
    KnowledgeBase kb = encode_3sat_normal(parse_dimacs("p cnf 1 1\n1 0\n"));
    Partition empty(AtomSet(kb.universe()), AtomSet(kb.universe()));
    // Forcing the single variable true leaves exactly its false-polarity
    // atom out of the upper bound.
    CHECK(atmost(kb, empty) == set_of(kb, {"v1_t", "sat"}));
    CHECK(unfounded_approx(kb, empty).set == set_of(kb, {"v1_f"}));
}

TEST_CASE("plain clause import") {
    CnfInstance cnf = parse_dimacs("p cnf 2 2\n1 2 0\n-1 0\n");
    KnowledgeBase kb = cnf_as_kb(cnf);
    CHECK(kb.rules().empty());
    CHECK(kb.ka().empty());
    CHECK(kb.ontology().clauses().size() == 2);
    CHECK(serialize_kb(kb) == "#clause x1 | x2.\n#clause -x1.\n");
    SUBCASE("tautological input clauses are dropped") {
        KnowledgeBase t = cnf_as_kb(parse_dimacs("p cnf 2 2\n1 -1 2 0\n2 0\n"));
        CHECK(t.ontology().clauses().size() == 1);
        CHECK(serialize_kb(t) == "#clause x2.\n");
    }
}
