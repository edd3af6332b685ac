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

#include "hmknf/ontology.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hmknf {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
    if (literals_.empty()) throw std::invalid_argument("empty clause");
    std::sort(literals_.begin(), literals_.end());
    literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
    for (std::size_t i = 1; i < literals_.size(); ++i)
        if (literals_[i].atom == literals_[i - 1].atom)
            throw std::invalid_argument("tautological clause");
}

ClausalOntology::ClausalOntology(std::vector<Clause> clauses, std::size_t universe)
    : vocabulary_(universe), universe_(universe) {
    for (auto& c : clauses) {
        if (std::find(clauses_.begin(), clauses_.end(), c) != clauses_.end()) continue;
        for (const Literal& l : c.literals()) {
            assert(l.atom < universe_);
            vocabulary_.insert(l.atom);
        }
        clauses_.push_back(std::move(c));
    }
}

bool ClausalOntology::operator==(const ClausalOntology& o) const {
    // Clause order is irrelevant to the theory; compare as sets.
    auto a = clauses_;
    auto b = o.clauses_;
    std::sort(a.begin(), a.end(), [](const Clause& x, const Clause& y) { return x < y; });
    std::sort(b.begin(), b.end(), [](const Clause& x, const Clause& y) { return x < y; });
    return a == b;
}

namespace {

// Plain recursive DPLL with unit propagation. Inputs are desk-scale (tens
// of atoms, hundreds of clauses), so clause scanning beats the bookkeeping
// of watched literals here. Assignment values: -1 unknown, 0 false, 1 true.
class DpllSolver {
public:
    explicit DpllSolver(const ClausalOntology& o)
        : onto_(o), assign_(o.universe(), -1) {}

    bool solve(std::span<const Literal> assumptions) {
        for (const Literal& l : assumptions) {
            assert(l.atom < assign_.size());
            int want = l.positive ? 1 : 0;
            if (assign_[l.atom] == -1)
                assign_[l.atom] = static_cast<signed char>(want);
            else if (assign_[l.atom] != want)
                return false; // complementary assumptions
        }
        return search();
    }

private:
    bool search() {
        std::vector<AtomId> trail;
        if (!propagate(trail)) {
            undo(trail);
            return false;
        }
        AtomId branch = 0;
        if (!pick_branch(branch)) {
            // Every clause is satisfied under the current partial
            // assignment; unassigned atoms are unconstrained.
            undo(trail);
            return true;
        }
        for (int v : {1, 0}) {
            assign_[branch] = static_cast<signed char>(v);
            if (search()) {
                assign_[branch] = -1;
                undo(trail);
                return true;
            }
        }
        assign_[branch] = -1;
        undo(trail);
        return false;
    }

    // Unit propagation to fixpoint; false on an empty clause.
    bool propagate(std::vector<AtomId>& trail) {
        bool again = true;
        while (again) {
            again = false;
            for (const Clause& c : onto_.clauses()) {
                bool sat_clause = false;
                int free_count = 0;
                Literal unit = {0, true};
                for (const Literal& l : c.literals()) {
                    signed char v = assign_[l.atom];
                    if (v == -1) {
                        ++free_count;
                        unit = l;
                    } else if ((v == 1) == l.positive) {
                        sat_clause = true;
                        break;
                    }
                }
                if (sat_clause) continue;
                if (free_count == 0) return false;
                if (free_count == 1) {
                    assign_[unit.atom] = unit.positive ? 1 : 0;
                    trail.push_back(unit.atom);
                    again = true;
                }
            }
        }
        return true;
    }

    // Chooses a free atom from some not-yet-satisfied clause. Returns false
    // if all clauses are satisfied.
    bool pick_branch(AtomId& out) const {
        for (const Clause& c : onto_.clauses()) {
            bool sat_clause = false;
            AtomId candidate = 0;
            bool has_candidate = false;
            for (const Literal& l : c.literals()) {
                signed char v = assign_[l.atom];
                if (v == -1) {
                    if (!has_candidate) {
                        candidate = l.atom;
                        has_candidate = true;
                    }
                } else if ((v == 1) == l.positive) {
                    sat_clause = true;
                    break;
                }
            }
            if (!sat_clause) {
                assert(has_candidate); // otherwise propagate() would have failed
                out = candidate;
                return true;
            }
        }
        return false;
    }

    void undo(const std::vector<AtomId>& trail) {
        for (AtomId a : trail) assign_[a] = -1;
    }

    const ClausalOntology& onto_;
    std::vector<signed char> assign_;
};

// Canonical cache key: sorted, deduplicated literal codes packed as bytes.
// Returns false in `consistent` when the set contains a complementary pair.
std::string make_key(std::vector<Literal>& assumptions, bool& consistent) {
    std::sort(assumptions.begin(), assumptions.end());
    assumptions.erase(std::unique(assumptions.begin(), assumptions.end()), assumptions.end());
    consistent = true;
    std::string key;
    key.reserve(assumptions.size() * sizeof(std::uint64_t));
    for (std::size_t i = 0; i < assumptions.size(); ++i) {
        if (i > 0 && assumptions[i].atom == assumptions[i - 1].atom) consistent = false;
        std::uint64_t code = assumptions[i].code();
        for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((code >> (8 * b)) & 0xff));
    }
    return key;
}

} // namespace

bool satisfiable(const ClausalOntology& o, std::span<const Literal> assumptions) {
    DpllSolver solver(o);
    return solver.solve(assumptions);
}

bool OntologyOracle::satisfiable(std::vector<Literal> assumptions) const {
    bool consistent = true;
    std::string key = make_key(assumptions, consistent);
    if (!consistent) return false;
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    bool result = hmknf::satisfiable(onto_, assumptions);
    cache_.emplace(std::move(key), result);
    return result;
}

bool OntologyOracle::entails(const AtomSet& s, AtomId a) const {
    std::vector<Literal> assumptions;
    assumptions.reserve(s.count() + 1);
    for (AtomId x : s) assumptions.push_back(pos(x));
    assumptions.push_back(neg(a));
    return !satisfiable(std::move(assumptions));
}

bool OntologyOracle::satisfiable_with(const AtomSet& s, std::span<const Literal> extra) const {
    std::vector<Literal> assumptions;
    assumptions.reserve(s.count() + extra.size());
    for (AtomId x : s) assumptions.push_back(pos(x));
    assumptions.insert(assumptions.end(), extra.begin(), extra.end());
    return satisfiable(std::move(assumptions));
}

} // namespace hmknf
