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

#ifndef HMKNF_SOLVER_HPP
#define HMKNF_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "hmknf/propagation.hpp"

namespace hmknf {

struct SolveStats {
    std::uint64_t decisions = 0; // branch nodes visited (one per chosen atom)
    std::uint64_t conflicts = 0; // propagation conflicts hit
    std::uint64_t checks = 0;    // total-partition model checks run
};

struct SolveOutcome {
    bool found = false;
    std::vector<Partition> models; // first model, or all in all-models mode
    SolveStats stats;
};

// Exact test that the total partition p induces an MKNF model:
//   (a) OB_T is consistent;
//   (b) no b ∈ F is entailed by OB_T;
//   (c) every rule with body+ ⊆ T and body- ⊆ F has a head atom in T;
//   (d) no proper "competitor" S ⊆ T exists whose ontology closure loses
//       some atom of T while still satisfying every rule whose negative
//       body is in F (the strict-superset models test).
// Enumerates the 2^|T| subsets for (d); desk-scale by design.
// Throws std::invalid_argument if p is not total w.r.t. KA(k).
bool check_model(const KnowledgeBase& k, const Partition& p);

// Backtracking search: propagate, branch on the smallest undecided atom id
// (true first), check total partitions with check_model. With all_models
// the search keeps going after a hit and collects every model in discovery
// order (deduplicated defensively; chronological backtracking cannot
// revisit a total partition).
SolveOutcome solve(const KnowledgeBase& k, const Partition& p, bool all_models);

// Search from the empty partition.
SolveOutcome solve(const KnowledgeBase& k, bool all_models = false);

// Independent oracle: enumerates all 2^|KA| total partitions in ascending
// bitmask order (bit j of the mask = j-th smallest K-atom assigned true)
// and filters with check_model. Throws GuardError when |KA| > 20.
std::vector<Partition> brute_force_models(const KnowledgeBase& k);

} // namespace hmknf

#endif // HMKNF_SOLVER_HPP
