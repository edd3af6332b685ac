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

#include "hmknf/kb.hpp"

#include <stdexcept>

namespace hmknf {

AtomSet ka_of(std::span<const Rule> rules, std::size_t universe) {
    AtomSet ka(universe);
    for (const Rule& r : rules) {
        ka |= r.head;
        ka |= r.body_pos;
        ka |= r.body_neg;
    }
    return ka;
}

void KnowledgeBaseBuilder::add_rule(std::vector<std::string> head, std::vector<std::string> body_pos,
                                    std::vector<std::string> body_neg) {
    RawRule raw;
    for (const auto& n : head) raw.head.push_back(atoms_.intern(n));
    for (const auto& n : body_pos) raw.body_pos.push_back(atoms_.intern(n));
    for (const auto& n : body_neg) raw.body_neg.push_back(atoms_.intern(n));
    if (raw.head.empty()) throw std::invalid_argument("rule with empty head");
    rules_.push_back(std::move(raw));
}

void KnowledgeBaseBuilder::add_rule_ids(std::vector<AtomId> head, std::vector<AtomId> body_pos,
                                        std::vector<AtomId> body_neg) {
    if (head.empty()) throw std::invalid_argument("rule with empty head");
    rules_.push_back(RawRule{std::move(head), std::move(body_pos), std::move(body_neg)});
}

void KnowledgeBaseBuilder::add_clause(std::vector<std::pair<std::string, bool>> literals) {
    std::vector<Literal> lits;
    lits.reserve(literals.size());
    for (auto& [name, positive] : literals) lits.push_back({atoms_.intern(name), positive});
    add_clause_ids(std::move(lits));
}

void KnowledgeBaseBuilder::add_clause_ids(std::vector<Literal> literals) {
    Clause checked(std::move(literals)); // validates non-empty / non-tautological
    clauses_.push_back({checked.literals().begin(), checked.literals().end()});
}

KnowledgeBase KnowledgeBaseBuilder::build() const {
    KnowledgeBase kb;
    kb.atoms_ = atoms_;
    std::size_t universe = atoms_.size();
    for (const RawRule& raw : rules_) {
        Rule r{AtomSet(universe), AtomSet(universe), AtomSet(universe)};
        for (AtomId a : raw.head) r.head.insert(a);
        for (AtomId a : raw.body_pos) r.body_pos.insert(a);
        for (AtomId a : raw.body_neg) r.body_neg.insert(a);
        kb.rules_.push_back(std::move(r));
    }
    std::vector<Clause> clauses;
    clauses.reserve(clauses_.size());
    for (const auto& lits : clauses_) clauses.emplace_back(lits);
    kb.ka_ = ka_of(kb.rules_, universe);
    kb.oracle_ = std::make_shared<OntologyOracle>(ClausalOntology(std::move(clauses), universe));
    return kb;
}

} // namespace hmknf
