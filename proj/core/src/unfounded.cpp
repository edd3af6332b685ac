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

#include "hmknf/unfounded.hpp"

#include <cassert>

#include "hmknf/errors.hpp"

namespace hmknf {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    constexpr std::uint64_t cap = std::uint64_t(1) << 63;
    if (a != 0 && b > cap / a) return cap;
    return a * b;
}

void check_enumeration_guard(std::uint64_t space, const char* what) {
    if (space > kEnumerationLimit)
        throw GuardError(std::string(what) + " enumeration space exceeds 2^24; refusing exact computation");
}

// Per-b consistency gate shared by the membership test and z_step: the set
// `base` of atoms assumed true must stay consistent with each single false
// atom, or on its own when F is empty (mirroring dependability).
bool consistent_per_false(const OntologyOracle& oracle, const AtomSet& base, const AtomSet& f) {
    if (f.empty()) return oracle.satisfiable_with(base, {});
    for (AtomId b : f) {
        Literal extra[] = {neg(b)};
        if (!oracle.satisfiable_with(base, extra)) return false;
    }
    return true;
}

// Depth-first search for an undefeated head-cut entailing `target`.
// Rules are visited in input order; per rule the choices are: skip, then
// each head atom in ascending id. Branches are cut when a chosen pair is
// defeated (it could never appear in a witness) or when the accumulated
// chosen heads violate the per-false-atom consistency requirement (the
// requirement is anti-monotone in the head set). Entailment, which is
// monotone, is checked at the leaves.
class WitnessSearch {
public:
    WitnessSearch(const KnowledgeBase& k, const Partition& p, const AtomSet& x)
        : k_(k), p_(p), chosen_(k.universe()) {
        const auto& rules = k.rules();
        defeated_.resize(rules.size());
        AtomSet f_or_x = p.f() | x;
        for (std::size_t i = 0; i < rules.size(); ++i) {
            const Rule& r = rules[i];
            defeated_[i] = r.body_pos.intersects(f_or_x) || r.body_neg.intersects(p.t()) ||
                           r.head.intersects(p.t());
        }
    }

    bool find(AtomId target, HeadCut* witness) {
        target_ = target;
        cut_.clear();
        return descend(0, witness);
    }

private:
    bool descend(std::size_t rule_idx, HeadCut* witness) {
        if (rule_idx == k_.rules().size()) {
            if (!entails_target()) return false;
            if (witness) *witness = cut_;
            return true;
        }
        // Skipping the rule comes first, so the reported witness is minimal
        // in the documented order.
        if (descend(rule_idx + 1, witness)) return true;
        if (defeated_[rule_idx]) return false;
        for (AtomId h : k_.rules()[rule_idx].head) {
            if (chosen_.contains(h)) {
                // Atom already provided by an earlier pair; the head set and
                // hence both remaining conditions are unchanged, so this
                // subtree repeats work without enlarging the reachable head
                // sets. Still enumerated? No: the duplicate pair can only
                // make the cut longer with the same head set, and any
                // witness found through it corresponds to one without the
                // pair, which the skip branch already visited.
                continue;
            }
            chosen_.insert(h);
            cut_.push_back({rule_idx, h});
            bool ok = consistent_per_false(k_.oracle(), p_.t() | chosen_, p_.f()) &&
                      descend(rule_idx + 1, witness);
            cut_.pop_back();
            chosen_.erase(h);
            if (ok) return true;
        }
        return false;
    }

    bool entails_target() {
        std::vector<Literal> assumptions;
        for (AtomId a : p_.t()) assumptions.push_back(pos(a));
        for (AtomId a : chosen_) assumptions.push_back(pos(a));
        assumptions.push_back(neg(target_));
        return !k_.oracle().satisfiable(std::move(assumptions));
    }

    const KnowledgeBase& k_;
    const Partition& p_;
    AtomSet chosen_; // union of heads picked on the current path
    std::vector<bool> defeated_;
    HeadCut cut_;
    AtomId target_ = 0;
};

} // namespace

std::uint64_t head_cut_space(const KnowledgeBase& k) {
    std::uint64_t space = 1;
    for (const Rule& r : k.rules()) space = saturating_mul(space, 1 + r.head.count());
    return space;
}

std::uint64_t weak_head_cut_space(const KnowledgeBase& k) {
    std::uint64_t space = 1;
    for (const Rule& r : k.rules()) {
        std::uint64_t heads = r.head.count();
        std::uint64_t factor = heads >= 63 ? (std::uint64_t(1) << 63) : (std::uint64_t(1) << heads);
        space = saturating_mul(space, factor);
    }
    return space;
}

bool is_unfounded_set(const KnowledgeBase& k, const Partition& p, const AtomSet& x, HeadCut* witness) {
    assert(x.is_subset_of(k.ka()));
    check_enumeration_guard(head_cut_space(k), "head-cut");
    if (!is_dependable(k, p)) return true; // no head-cut passes the consistency requirement
    WitnessSearch search(k, p, x);
    for (AtomId a : x)
        if (search.find(a, witness)) return false;
    return true;
}

UnfoundedReport greatest_unfounded_set(const KnowledgeBase& k, const Partition& p) {
    check_enumeration_guard(head_cut_space(k), "head-cut");
    if (!is_dependable(k, p)) return {k.ka(), /*exact=*/true, /*partition_dependable=*/false, std::nullopt};

    // Start from everything outside T and delete atoms that acquire an
    // undefeated entailing head-cut relative to the current candidate set.
    // The sweep operator is monotone, so batched deletion converges to the
    // greatest fixpoint — the union of all unfounded sets.
    AtomSet x = k.ka() - p.t();
    for (;;) {
        WitnessSearch search(k, p, x);
        AtomSet deletable(k.universe());
        for (AtomId a : x)
            if (search.find(a, nullptr)) deletable.insert(a);
        if (deletable.empty()) break;
        x -= deletable;
    }
    return {std::move(x), /*exact=*/true, /*partition_dependable=*/true, std::nullopt};
}

AtomSet z_step(const KnowledgeBase& k, const Partition& p, const AtomSet& x) {
    const OntologyOracle& oracle = k.oracle();
    AtomSet result = p.t();
    for (AtomId a : k.ka())
        if (oracle.entails(x, a)) result.insert(a);
    for (const Rule& r : k.rules()) {
        if (!r.body_pos.is_subset_of(x)) continue;
        if (r.body_pos.intersects(p.f())) continue;
        if (r.body_neg.intersects(p.t())) continue;
        if (r.head.intersects(p.t())) continue;
        for (AtomId a : r.head) {
            if (result.contains(a)) continue;
            AtomSet just_a(k.universe());
            just_a.insert(a);
            if (consistent_per_false(oracle, p.t() | just_a, p.f())) result.insert(a);
        }
    }
    return result;
}

AtomSet atmost(const KnowledgeBase& k, const Partition& p) {
    AtomSet x(k.universe());
    for (std::size_t iter = 0;; ++iter) {
        AtomSet next = z_step(k, p, x);
        if (next == x) return x;
        x = std::move(next);
        assert(iter <= k.ka().count() + 1);
    }
}

UnfoundedReport unfounded_approx(const KnowledgeBase& k, const Partition& p) {
    UnfoundedReport report{k.ka() - atmost(k, p), /*exact=*/false, is_dependable(k, p), std::nullopt};
    return report;
}

bool is_head_independent(const KnowledgeBase& k, const Partition& p) {
    const auto& rules = k.rules();
    // Only rules with two or more head atoms can make a weak head-cut differ
    // from its sub-head-cuts.
    bool any_wide_head = false;
    for (const Rule& r : rules)
        if (r.head.count() >= 2) any_wide_head = true;
    if (!any_wide_head) return true;
    check_enumeration_guard(weak_head_cut_space(k), "weak head-cut");

    const OntologyOracle& oracle = k.oracle();
    std::vector<std::vector<AtomId>> heads(rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i) heads[i] = rules[i].head.to_vector();

    // Enumerate per-rule head subsets by bitmask, depth-first.
    std::vector<std::vector<AtomId>> groups(rules.size());

    // Checks one fully chosen weak head-cut W: for every K-atom entailed by
    // OB_T ∪ head(W) there must be a single-choice selection through the
    // non-empty groups that still entails it. Maximal selections suffice —
    // entailment only grows with the head set.
    auto violates = [&]() {
        AtomSet chosen(k.universe());
        std::vector<const std::vector<AtomId>*> active;
        for (const auto& g : groups)
            if (!g.empty()) {
                active.push_back(&g);
                for (AtomId a : g) chosen.insert(a);
            }
        bool genuinely_weak = false;
        for (const auto* g : active)
            if (g->size() >= 2) genuinely_weak = true;
        if (!genuinely_weak) return false; // W itself is a head-cut
        for (AtomId a : k.ka()) {
            Literal extra[] = {neg(a)};
            if (oracle.satisfiable_with(p.t() | chosen, extra)) continue; // W does not entail a
            // Search the maximal single-choice selections.
            std::vector<std::size_t> pick(active.size(), 0);
            bool covered = false;
            for (;;) {
                AtomSet sel(k.universe());
                for (std::size_t i = 0; i < active.size(); ++i) sel.insert((*active[i])[pick[i]]);
                if (!oracle.satisfiable_with(p.t() | sel, extra)) {
                    covered = true;
                    break;
                }
                std::size_t i = 0;
                while (i < pick.size() && ++pick[i] == active[i]->size()) pick[i++] = 0;
                if (i == pick.size()) break;
            }
            if (!covered) return true;
        }
        return false;
    };

    // Depth-first over rules; group = subset of the rule's head atoms.
    auto descend = [&](auto&& self, std::size_t rule_idx) -> bool {
        if (rule_idx == rules.size()) return !violates();
        std::size_t n = heads[rule_idx].size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            groups[rule_idx].clear();
            for (std::size_t bit = 0; bit < n; ++bit)
                if (mask & (std::uint64_t(1) << bit)) groups[rule_idx].push_back(heads[rule_idx][bit]);
            bool ok = self(self, rule_idx + 1);
            groups[rule_idx].clear();
            if (!ok) return false;
        }
        return true;
    };
    return descend(descend, 0);
}

} // namespace hmknf
