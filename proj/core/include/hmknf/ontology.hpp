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

#ifndef HMKNF_ONTOLOGY_HPP
#define HMKNF_ONTOLOGY_HPP

#include <compare>
#include <cstdint>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "hmknf/atom_set.hpp"

namespace hmknf {

struct Literal {
    AtomId atom;
    bool positive;

    // Encoding used for canonical ordering and cache keys.
    std::uint64_t code() const { return (std::uint64_t(atom) << 1) | (positive ? 1 : 0); }

    friend auto operator<=>(const Literal& a, const Literal& b) { return a.code() <=> b.code(); }
    friend bool operator==(const Literal& a, const Literal& b) { return a.code() == b.code(); }
};

inline Literal pos(AtomId a) { return {a, true}; }
inline Literal neg(AtomId a) { return {a, false}; }

// Propositional clause: a non-empty, non-tautological disjunction of
// literals over distinct atoms, stored sorted by atom id.
class Clause {
public:
    // Sorts and deduplicates. Throws std::invalid_argument if the literal
    // set is empty or contains an atom in both polarities (tautology).
    explicit Clause(std::vector<Literal> literals);

    std::span<const Literal> literals() const { return literals_; }

    bool operator==(const Clause& o) const { return literals_ == o.literals_; }
    bool operator<(const Clause& o) const { return literals_ < o.literals_; }

private:
    std::vector<Literal> literals_;
};

// A propositional ontology in clausal form, interpreted as the conjunction
// of its clauses. The universe covers every atom id of the owning knowledge
// base; the vocabulary is the subset mentioned in clauses.
class ClausalOntology {
public:
    ClausalOntology() = default;

    // Keeps clause order but drops duplicate clauses (set semantics).
    ClausalOntology(std::vector<Clause> clauses, std::size_t universe);

    const std::vector<Clause>& clauses() const { return clauses_; }
    const AtomSet& vocabulary() const { return vocabulary_; }
    std::size_t universe() const { return universe_; }

    bool operator==(const ClausalOntology& o) const;

private:
    std::vector<Clause> clauses_;
    AtomSet vocabulary_;
    std::size_t universe_ = 0;
};

// Exact satisfiability of o's clauses conjoined with the given assumption
// literals (unit clauses). Complete DPLL search; one-shot, uncached.
bool satisfiable(const ClausalOntology& o, std::span<const Literal> assumptions);

// Memoizing wrapper around the DPLL procedure. Every operator in this
// library funnels its ontology queries through one oracle per knowledge
// base, so identical assumption sets (which recur heavily during head-cut
// enumeration and fixpoint iteration) are decided once. Thread-safe.
class OntologyOracle {
public:
    explicit OntologyOracle(ClausalOntology o) : onto_(std::move(o)) {}

    // satisfiable(π(O) ∪ assumptions); duplicates are fine, a complementary
    // pair short-circuits to false.
    bool satisfiable(std::vector<Literal> assumptions) const;

    // OB_S ⊨ a, i.e. the positives of S together with the clauses entail a;
    // decided by refutation: unsat(S ∪ {¬a}).
    bool entails(const AtomSet& s, AtomId a) const;

    // satisfiable(π(O) ∪ positives(s) ∪ extra).
    bool satisfiable_with(const AtomSet& s, std::span<const Literal> extra) const;

    const ClausalOntology& ontology() const { return onto_; }

private:
    ClausalOntology onto_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::string, bool> cache_;
};

} // namespace hmknf

#endif // HMKNF_ONTOLOGY_HPP
