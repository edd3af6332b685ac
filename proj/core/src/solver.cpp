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

#include "hmknf/solver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hmknf/errors.hpp"

namespace hmknf {

namespace {

// {a ∈ KA | OB_S ⊨ a}.
AtomSet ontology_closure(const KnowledgeBase& k, const AtomSet& s) {
    AtomSet closure(k.universe());
    for (AtomId a : k.ka())
        if (k.oracle().entails(s, a)) closure.insert(a);
    return closure;
}

// Condition (d): a competitor is a subset S of T whose closure drops some
// atom of T (so the induced interpretation set strictly grows) yet still
// satisfies every rule whose negative body lies inside F. If one exists,
// T is not minimal and p induces no MKNF model.
bool has_competitor(const KnowledgeBase& k, const Partition& p) {
    std::vector<AtomId> t_atoms = p.t().to_vector();
    std::size_t n = t_atoms.size();
    assert(n < 64);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        AtomSet s(k.universe());
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (std::uint64_t(1) << j)) s.insert(t_atoms[j]);
        AtomSet closure = ontology_closure(k, s);
        if (p.t().is_subset_of(closure)) continue; // nothing dropped
        bool rules_hold = true;
        for (const Rule& r : k.rules()) {
            if (!r.body_neg.is_subset_of(p.f())) continue;
            if (!r.body_pos.is_subset_of(closure)) continue;
            if (!r.head.intersects(closure)) {
                rules_hold = false;
                break;
            }
        }
        if (rules_hold) return true;
    }
    return false;
}

} // namespace

bool check_model(const KnowledgeBase& k, const Partition& p) {
    if (!p.total(k.ka())) throw std::invalid_argument("check_model requires a total partition");
    const OntologyOracle& oracle = k.oracle();
    if (!oracle.satisfiable_with(p.t(), {})) return false; // (a)
    for (AtomId b : p.f())
        if (oracle.entails(p.t(), b)) return false; // (b)
    for (const Rule& r : k.rules())
        if (applicable(r, p) && !r.head.intersects(p.t())) return false; // (c)
    return !has_competitor(k, p); // (d)
}

namespace {

class Search {
public:
    Search(const KnowledgeBase& k, bool all_models) : k_(k), all_models_(all_models) {}

    // Returns true once a model has been found (and, without all-models
    // mode, the search should unwind).
    bool run(const Partition& p) {
        PropagationResult pr = propagate(k_, p);
        if (!pr.ok()) {
            ++outcome_.stats.conflicts;
            return false;
        }
        const Partition& fixed = pr.partition();
        AtomSet undecided = fixed.undecided(k_.ka());
        if (undecided.empty()) {
            ++outcome_.stats.checks;
            if (check_model(k_, fixed)) {
                record(fixed);
                return true;
            }
            return false;
        }
        AtomId pick = *undecided.begin();
        ++outcome_.stats.decisions;

        AtomSet t = fixed.t();
        t.insert(pick);
        bool found_true = run(Partition(t, fixed.f()));
        if (found_true && !all_models_) return true;

        AtomSet f = fixed.f();
        f.insert(pick);
        bool found_false = run(Partition(fixed.t(), f));
        return found_true || found_false;
    }

    SolveOutcome take() { return std::move(outcome_); }

private:
    void record(const Partition& model) {
        // Chronological backtracking visits each total partition at most
        // once; deduplicate anyway so the contract does not depend on it.
        auto it = std::find(outcome_.models.begin(), outcome_.models.end(), model);
        assert(it == outcome_.models.end());
        if (it == outcome_.models.end()) outcome_.models.push_back(model);
        outcome_.found = true;
    }

    const KnowledgeBase& k_;
    bool all_models_;
    SolveOutcome outcome_;
};

} // namespace

SolveOutcome solve(const KnowledgeBase& k, const Partition& p, bool all_models) {
    Search search(k, all_models);
    search.run(p);
    SolveOutcome outcome = search.take();
    return outcome;
}

SolveOutcome solve(const KnowledgeBase& k, bool all_models) {
    return solve(k, Partition(AtomSet(k.universe()), AtomSet(k.universe())), all_models);
}

std::vector<Partition> brute_force_models(const KnowledgeBase& k) {
    std::vector<AtomId> ka = k.ka().to_vector();
    if (ka.size() > 20) throw GuardError("brute-force enumeration refuses more than 20 K-atoms");
    std::vector<Partition> models;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << ka.size()); ++mask) {
        AtomSet t(k.universe());
        AtomSet f(k.universe());
        for (std::size_t j = 0; j < ka.size(); ++j) {
            if (mask & (std::uint64_t(1) << j))
                t.insert(ka[j]);
            else
                f.insert(ka[j]);
        }
        Partition p(std::move(t), std::move(f));
        if (check_model(k, p)) models.push_back(std::move(p));
    }
    return models;
}

} // namespace hmknf
