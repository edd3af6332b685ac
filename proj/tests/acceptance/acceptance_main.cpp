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

// Acceptance gate: one pass/fail line per criterion on stdout; the exit
// code is the number of failed criteria. Each criterion re-checks a core
// guarantee of the library end to end, mostly against independent oracles
// on a generated corpus.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "support/test_utils.hpp"

#include "hmknf/reduction.hpp"
#include "hmknf/solver.hpp"

using namespace hmknf;
using namespace hmknf_test;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail; // shown on failure (and for context on pass)
};

// ---------------------------------------------------------------------------
// Shared corpora. Generated once with fixed seeds; the criteria below only
// read them.

struct Instance {
    KnowledgeBase kb;
    Partition partition; // random but dependable
};

std::vector<Instance> make_corpus() {
    RandomKbGenerator gen(20260814);
    std::vector<Instance> corpus;
    corpus.reserve(500);
    for (int i = 0; i < 500; ++i) {
        KnowledgeBase kb = gen.next();
        Partition p = random_dependable_partition(kb, gen.rng());
        corpus.push_back({std::move(kb), std::move(p)});
    }
    return corpus;
}

// ≥ 200 CNF instances with ≤ 3 variables and ≤ 4 clauses: 80 per variable
// count, clause count cycling 0..4, literals drawn from a fixed-seed stream.
std::vector<CnfInstance> make_cnf_family() {
    std::mt19937_64 rng(97);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<CnfInstance> family;
    for (int rep = 0; rep < 80; ++rep) {
        for (int n = 1; n <= 3; ++n) {
            CnfInstance cnf;
            cnf.num_vars = n;
            int m = rep % 5;
            for (int c = 0; c < m; ++c) {
                std::vector<int> clause;
                int len = pick(1, 3);
                for (int j = 0; j < len; ++j) {
                    int var = pick(1, n);
                    clause.push_back(pick(0, 1) ? var : -var);
                }
                cnf.clauses.push_back(std::move(clause));
            }
            family.push_back(std::move(cnf));
        }
    }
    return family;
}

// Truth-table CNF satisfiability, independent of everything under test.
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

Partition empty_partition(const KnowledgeBase& kb) {
    return Partition(AtomSet(kb.universe()), AtomSet(kb.universe()));
}

bool same_model_sets(std::vector<Partition> a, std::vector<Partition> b) {
    auto lt = [](const Partition& x, const Partition& y) { return x.t().to_vector() < y.t().to_vector(); };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    return a == b;
}

std::string ratio(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total); }

// ---------------------------------------------------------------------------
// Criterion 1: the six worked examples reproduce every documented verdict.

Outcome criterion_worked_examples(const std::vector<Instance>&, const std::vector<CnfInstance>&) {
    Outcome o;
    auto fail = [&](const std::string& what) {
        o.pass = false;
        o.detail += (o.detail.empty() ? "" : "; ") + what;
    };

    {
        KnowledgeBase kb = load_fixture("example1.kb");
        UnfoundedReport gus = greatest_unfounded_set(kb, part_of(kb, {"b"}, {}));
        if (gus.set != set_of(kb, {"f", "a", "a_p", "c"})) fail("example1 greatest unfounded set");
        if (gus.set.contains(*kb.atoms().find("b_p"))) fail("example1 b_p should stay founded");
    }
    {
        KnowledgeBase kb = load_fixture("example2.kb");
        if (!is_dependable(kb, part_of(kb, {}, {"a"}))) fail("example2 (∅,{a}) dependable");
        if (is_dependable(kb, part_of(kb, {"a"}, {"b"}))) fail("example2 ({a},{b}) not dependable");
        if (!is_unfounded_set(kb, part_of(kb, {}, {"a"}), set_of(kb, {"a"})))
            fail("example2 {a} unfounded under (∅,{a})");
    }
    {
        KnowledgeBase kb = load_fixture("example3.kb");
        Partition p = part_of(kb, {"a", "b"}, {});
        const std::vector<std::vector<std::string>> sets = {{"a"}, {"b"}, {"a", "b"}};
        for (const auto& x : sets)
            if (is_unfounded_set(kb, p, set_of(kb, x))) fail("example3 non-unfounded sets");
    }
    {
        KnowledgeBase kb = load_fixture("example4.kb");
        if (solve(kb, true).found) fail("example4 has no model");
    }
    {
        KnowledgeBase kb = load_fixture("example5.kb");
        Partition p = empty_partition(kb);
        if (greatest_unfounded_set(kb, p).set != set_of(kb, {"c"})) fail("example5 greatest unfounded set");
        if (!unfounded_approx(kb, p).set.empty()) fail("example5 approximation should be empty");
    }
    {
        KnowledgeBase kb = load_fixture("example6.kb");
        Partition p = empty_partition(kb);
        if (atmost(kb, p) != set_of(kb, {"a", "b", "c"})) fail("example6 upper bound");
        if (greatest_unfounded_set(kb, p).set != set_of(kb, {"c"})) fail("example6 greatest unfounded set");
    }
    return o;
}

// ---------------------------------------------------------------------------
// Criterion 2: the greatest unfounded set never meets the true side of a
// dependable partition.

Outcome criterion_gus_avoids_t(const std::vector<Instance>& corpus, const std::vector<CnfInstance>&) {
    int ok = 0;
    for (const Instance& inst : corpus) {
        UnfoundedReport gus = greatest_unfounded_set(inst.kb, inst.partition);
        if (gus.partition_dependable && !gus.set.intersects(inst.partition.t())) ++ok;
    }
    return {ok == static_cast<int>(corpus.size()), "disjoint on " + ratio(ok, corpus.size())};
}

// ---------------------------------------------------------------------------
// Criterion 3: sets passing the membership test are closed under union.

Outcome criterion_union_closure(const std::vector<Instance>& corpus, const std::vector<CnfInstance>&) {
    int ok = 0;
    for (const Instance& inst : corpus) {
        std::vector<AtomSet> passing = all_unfounded_subsets(inst.kb, inst.partition);
        std::set<std::vector<AtomId>> lookup;
        for (const AtomSet& s : passing) lookup.insert(s.to_vector());
        bool closed = true;
        for (std::size_t i = 0; i < passing.size() && closed; ++i)
            for (std::size_t j = i + 1; j < passing.size() && closed; ++j)
                if (!lookup.count((passing[i] | passing[j]).to_vector())) closed = false;
        if (closed) ++ok;
    }
    return {ok == static_cast<int>(corpus.size()), "closed on " + ratio(ok, corpus.size())};
}

// ---------------------------------------------------------------------------
// Criterion 4: the polynomial approximation is sound, and exact whenever the
// heads are independent and the upper bound is consistent with the ontology.

Outcome criterion_approximation(const std::vector<Instance>& corpus, const std::vector<CnfInstance>&) {
    int sound = 0, exact_due = 0, exact_ok = 0;
    for (const Instance& inst : corpus) {
        UnfoundedReport approx = unfounded_approx(inst.kb, inst.partition);
        UnfoundedReport gus = greatest_unfounded_set(inst.kb, inst.partition);
        if (approx.set.is_subset_of(gus.set)) ++sound;
        if (is_head_independent(inst.kb, inst.partition) &&
            inst.kb.oracle().satisfiable_with(atmost(inst.kb, inst.partition), {})) {
            ++exact_due;
            if (approx.set == gus.set) ++exact_ok;
        }
    }
    bool pass = sound == static_cast<int>(corpus.size()) && exact_ok == exact_due;
    return {pass, "sound on " + ratio(sound, corpus.size()) + ", exact on " + ratio(exact_ok, exact_due) +
                      " eligible"};
}

// ---------------------------------------------------------------------------
// Criterion 5: the deletion fixpoint equals the definitional union of all
// passing subsets.

Outcome criterion_gus_cross_validation(const std::vector<Instance>& corpus, const std::vector<CnfInstance>&) {
    int ok = 0;
    for (const Instance& inst : corpus) {
        AtomSet expected(inst.kb.universe());
        for (const AtomSet& s : all_unfounded_subsets(inst.kb, inst.partition)) expected |= s;
        if (greatest_unfounded_set(inst.kb, inst.partition).set == expected) ++ok;
    }
    return {ok == static_cast<int>(corpus.size()), "equal on " + ratio(ok, corpus.size())};
}

// ---------------------------------------------------------------------------
// Criterion 6: from any sub-partition of a model's partition, propagation
// stays conflict-free and below the model, and the greatest unfounded set
// avoids the model's true side.

Outcome criterion_extension_soundness(const std::vector<Instance>& corpus, const std::vector<CnfInstance>&) {
    std::mt19937_64 rng(4242);
    int checked = 0, ok = 0;
    for (const Instance& inst : corpus) {
        for (const Partition& model : brute_force_models(inst.kb)) {
            std::vector<AtomId> t = model.t().to_vector();
            std::vector<AtomId> f = model.f().to_vector();
            for (int s = 0; s < 16; ++s) {
                AtomSet st(inst.kb.universe());
                AtomSet sf(inst.kb.universe());
                for (AtomId a : t)
                    if (std::uniform_int_distribution<int>(0, 1)(rng)) st.insert(a);
                for (AtomId a : f)
                    if (std::uniform_int_distribution<int>(0, 1)(rng)) sf.insert(a);
                Partition sub(std::move(st), std::move(sf));
                ++checked;
                PropagationResult pr = propagate(inst.kb, sub);
                bool good = pr.ok() && pr.partition().leq(model) &&
                            !greatest_unfounded_set(inst.kb, sub).set.intersects(model.t());
                if (good) ++ok;
            }
        }
    }
    return {ok == checked, "held on " + ratio(ok, checked) + " sampled sub-partitions"};
}

// ---------------------------------------------------------------------------
// Criterion 7: the backtracking search finds exactly the brute-force models.

Outcome criterion_search_equivalence(const std::vector<Instance>& corpus, const std::vector<CnfInstance>&) {
    int ok = 0;
    for (const Instance& inst : corpus)
        if (same_model_sets(solve(inst.kb, empty_partition(inst.kb), true).models,
                            brute_force_models(inst.kb)))
            ++ok;
    return {ok == static_cast<int>(corpus.size()), "equal on " + ratio(ok, corpus.size())};
}

// ---------------------------------------------------------------------------
// Criterion 8: both 3SAT encodings make {sat} unfounded from the empty
// partition exactly for unsatisfiable inputs; the disjunctive encoder's
// upper bound additionally equals all K-atoms but sat and stays consistent.

Outcome criterion_reduction(const std::vector<Instance>&, const std::vector<CnfInstance>& family) {
    int n = static_cast<int>(family.size());
    int bic_ok = 0, identity_ok = 0, consistent_ok = 0;
    for (const CnfInstance& cnf : family) {
        bool unsat = !cnf_satisfiable(cnf);
        bool both = true;
        for (bool disjunctive : {false, true}) {
            KnowledgeBase kb = disjunctive ? encode_3sat_disjunctive(cnf) : encode_3sat_normal(cnf);
            AtomSet x(kb.universe());
            x.insert(*kb.atoms().find("sat"));
            if (is_unfounded_set(kb, empty_partition(kb), x) != unsat) both = false;
            if (disjunctive) {
                AtomSet bound = atmost(kb, empty_partition(kb));
                AtomSet expected = kb.ka();
                expected.erase(*kb.atoms().find("sat"));
                if (bound == expected) ++identity_ok;
                if (kb.oracle().satisfiable_with(bound, {})) ++consistent_ok;
            }
        }
        if (both) ++bic_ok;
    }
    bool pass = bic_ok == n && identity_ok == n && consistent_ok == n;
    return {pass, "biconditional " + ratio(bic_ok, n) + ", upper-bound identity " + ratio(identity_ok, n) +
                      ", consistency " + ratio(consistent_ok, n)};
}

// ---------------------------------------------------------------------------
// Criterion 9: on 3-variable disjunctive encodings the search explores fewer
// decisions than the 2^|KA| brute-force enumeration in at least 90% of cases.

Outcome criterion_pruning(const std::vector<Instance>&, const std::vector<CnfInstance>& family) {
    int total = 0, pruned = 0;
    for (const CnfInstance& cnf : family) {
        if (cnf.num_vars != 3) continue;
        KnowledgeBase kb = encode_3sat_disjunctive(cnf);
        ++total;
        std::uint64_t enumeration = std::uint64_t(1) << kb.ka().count();
        if (solve(kb, empty_partition(kb), true).stats.decisions < enumeration) ++pruned;
    }
    bool pass = total > 0 && pruned * 10 >= total * 9;
    return {pass, "pruned on " + ratio(pruned, total)};
}

// ---------------------------------------------------------------------------

struct Criterion {
    int number;
    const char* title;
    double limit_seconds; // 0 = no budget
    Outcome (*run)(const std::vector<Instance>&, const std::vector<CnfInstance>&);
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "worked-example regression", 1.0, criterion_worked_examples},
        {2, "greatest unfounded set avoids the true side", 60.0, criterion_gus_avoids_t},
        {3, "unfounded sets are closed under union", 60.0, criterion_union_closure},
        {4, "approximation soundness and conditional exactness", 0.0, criterion_approximation},
        {5, "deletion fixpoint matches the definitional union", 120.0, criterion_gus_cross_validation},
        {6, "models survive propagation from any sub-partition", 0.0, criterion_extension_soundness},
        {7, "search equals brute-force enumeration", 120.0, criterion_search_equivalence},
        {8, "3SAT reduction identities", 180.0, criterion_reduction},
        {9, "propagation prunes the search space", 0.0, criterion_pruning},
    };

    std::fprintf(stderr, "generating corpus: 500 knowledge bases, 240 CNF instances (fixed seeds)\n");
    std::vector<Instance> corpus = make_corpus();
    std::vector<CnfInstance> family = make_cnf_family();

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome = c.run(corpus, family);
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = c.limit_seconds <= 0.0 || elapsed < c.limit_seconds;
        bool pass = outcome.pass && in_budget;
        std::string detail = outcome.detail;
        if (!in_budget)
            detail += (detail.empty() ? "" : "; ") +
                      ("exceeded time budget of " + std::to_string(c.limit_seconds) + "s");
        std::printf("[%s] %d %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", c.number, c.title, elapsed,
                    detail.empty() ? "" : " — ", detail.c_str());
        if (!pass) ++failures;
    }
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures;
}
