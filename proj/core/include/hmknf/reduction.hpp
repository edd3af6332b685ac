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

#ifndef HMKNF_REDUCTION_HPP
#define HMKNF_REDUCTION_HPP

#include <string_view>
#include <vector>

#include "hmknf/kb.hpp"

namespace hmknf {

// A 3SAT instance: DIMACS-style signed variable indices, 1-based, at most
// three literals per clause.
struct CnfInstance {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

// Validates: num_vars ≥ 1, each clause has 1–3 literals, every literal is
// non-zero with |lit| ≤ num_vars. Throws std::invalid_argument otherwise.
void validate_cnf(const CnfInstance& cnf);

// DIMACS CNF reader: `c` comment lines, one `p cnf VARS CLAUSES` header,
// whitespace-separated literals with `0` terminating each clause. The
// clause count must match the header. Throws ParseError.
CnfInstance parse_dimacs(std::string_view text);

// Satisfiability-preserving translations from 3SAT into the unfoundedness
// question "is {sat} unfounded w.r.t. (∅,∅)?" — the CNF is unsatisfiable
// iff {sat} is unfounded, for both encodings.
//
// Normal encoding (all heads singleton): atoms v{i}_t / v{i}_f / v{i}_u per
// variable plus sat and total; program
//     sat :- sat.    v{i}_t :- not v{i}_f.    v{i}_f :- not v{i}_t.
// ontology: exactly-one(v{i}_u, v{i}_f, v{i}_t) per variable; the guard
// total ⟺ no variable undefined, total ⊃ sat; and per CNF clause its
// literal image disjoined with ¬total.
KnowledgeBase encode_3sat_normal(const CnfInstance& cnf);

// Disjunctive encoding: program
//     sat :- sat.    v{i}_t ; v{i}_f.
// ontology: (v{i}_f ∨ v{i}_t) xor v{i}_u per variable; (v{i}_f ∧ v{i}_t)
// ⊃ sat per variable; and the guard (all clauses hold ∧ no v{i}_u) ⊃ sat,
// expanded by direct product distribution over the clauses — guarded at
// ∏|clause| ≤ 2^16 products (GuardError beyond).
KnowledgeBase encode_3sat_disjunctive(const CnfInstance& cnf);

// The instance's clauses as a ClausalOntology over atoms x1..xn (for
// deciding the raw CNF with the same satisfiability engine).
KnowledgeBase cnf_as_kb(const CnfInstance& cnf);

} // namespace hmknf

#endif // HMKNF_REDUCTION_HPP
