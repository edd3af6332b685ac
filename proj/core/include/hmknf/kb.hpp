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

#ifndef HMKNF_KB_HPP
#define HMKNF_KB_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hmknf/atom_set.hpp"
#include "hmknf/atom_table.hpp"
#include "hmknf/ontology.hpp"

namespace hmknf {

// Ground MKNF rule  h1 ; ... ; hk :- b1, ..., bm, not c1, ..., not cn.
// The head is non-empty; all three parts have set semantics.
struct Rule {
    AtomSet head;
    AtomSet body_pos;
    AtomSet body_neg;

    bool operator==(const Rule&) const = default;
};

// K-atoms of a program: every atom occurring in some rule head or body.
AtomSet ka_of(std::span<const Rule> rules, std::size_t universe);

// One head atom chosen from each of a subset of the rules — at most one
// pair per rule. Pairs are kept sorted by rule index.
struct HeadCutPair {
    std::size_t rule;
    AtomId atom;

    bool operator==(const HeadCutPair&) const = default;
};
using HeadCut = std::vector<HeadCutPair>;

// Immutable hybrid knowledge base (P, O) plus its interned atom table and
// a shared memoizing oracle for ontology queries.
class KnowledgeBase {
public:
    const std::vector<Rule>& rules() const { return rules_; }
    const ClausalOntology& ontology() const { return oracle_->ontology(); }
    const AtomSet& ka() const { return ka_; }
    const AtomTable& atoms() const { return atoms_; }
    std::size_t universe() const { return atoms_.size(); }
    const OntologyOracle& oracle() const { return *oracle_; }

    // Structural equality: same atom names/ids, same rules, same theory.
    bool operator==(const KnowledgeBase& o) const {
        return atoms_ == o.atoms_ && rules_ == o.rules_ && ontology() == o.ontology();
    }

private:
    friend class KnowledgeBaseBuilder;
    KnowledgeBase() = default;

    AtomTable atoms_;
    std::vector<Rule> rules_;
    AtomSet ka_;
    // The oracle owns the ontology; sharing it keeps copies of the KB cheap
    // and lets them reuse one query cache.
    std::shared_ptr<OntologyOracle> oracle_;
};

// Single construction path for knowledge bases (used by the text parser,
// the reduction encoders, and the test generators). Atoms are interned in
// the order they are first mentioned; sets are sized once all atoms are
// known.
class KnowledgeBaseBuilder {
public:
    AtomId intern(std::string_view name) { return atoms_.intern(name); }

    // Throws std::invalid_argument on an empty head.
    void add_rule(std::vector<std::string> head, std::vector<std::string> body_pos,
                  std::vector<std::string> body_neg);
    void add_rule_ids(std::vector<AtomId> head, std::vector<AtomId> body_pos,
                      std::vector<AtomId> body_neg);

    // Throws std::invalid_argument on an empty or tautological clause.
    void add_clause(std::vector<std::pair<std::string, bool>> literals);
    void add_clause_ids(std::vector<Literal> literals);

    KnowledgeBase build() const;

private:
    struct RawRule {
        std::vector<AtomId> head, body_pos, body_neg;
    };

    AtomTable atoms_;
    std::vector<RawRule> rules_;
    std::vector<std::vector<Literal>> clauses_;
};

} // namespace hmknf

#endif // HMKNF_KB_HPP
