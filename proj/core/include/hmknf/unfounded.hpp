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

#ifndef HMKNF_UNFOUNDED_HPP
#define HMKNF_UNFOUNDED_HPP

#include <optional>

#include "hmknf/partition.hpp"

namespace hmknf {

// Hard ceiling on the number of head-cuts (or weak head-cuts) an exact
// enumeration may visit; beyond it GuardError is thrown.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t(1) << 24;

// ∏ over rules of (1 + |head|), saturating at 2^63; the size of the
// head-cut space the exact tests walk.
std::uint64_t head_cut_space(const KnowledgeBase& k);

// ∏ over rules of 2^|head|, saturating; the weak head-cut space.
std::uint64_t weak_head_cut_space(const KnowledgeBase& k);

struct UnfoundedReport {
    AtomSet set;
    bool exact = false;              // exact oracle vs. polynomial approximation
    bool partition_dependable = true;
    std::optional<HeadCut> witness;  // see is_unfounded_set
};

// Exact membership test for "x is an unfounded set w.r.t. partition p":
// every head-cut R whose chosen heads together with OB_T entail some a ∈ x
// and stay per-false-atom consistent must contain a defeated pair — one
// whose rule has a positive body atom in F ∪ x, a negative body atom in T,
// or a head atom in T. When the answer is false and `witness` is non-null,
// it receives the first (in rule/atom order, skip first) undefeated head-cut
// that entails some a ∈ x. When p is not dependable every x passes
// vacuously: no head-cut at all survives the consistency requirement.
//
// Pre: x ⊆ ka. Throws GuardError when head_cut_space(k) > kEnumerationLimit.
bool is_unfounded_set(const KnowledgeBase& k, const Partition& p, const AtomSet& x,
                      HeadCut* witness = nullptr);

// Exact greatest unfounded set: deletion fixpoint starting from KA \ T,
// removing every atom that gains an undefeated entailing head-cut, sweep by
// sweep, until stable. For a non-dependable p the report is KA(K) with
// partition_dependable = false. Throws GuardError as above.
UnfoundedReport greatest_unfounded_set(const KnowledgeBase& k, const Partition& p);

// One step of the monotone "potentially derivable" operator:
//   T ∪ {a ∈ KA | OB_x ⊨ a}
//     ∪ {a ∈ head(r) | body+(r) ⊆ x, body+(r) ∩ F = ∅, body-(r) ∩ T = ∅,
//        head(r) ∩ T = ∅, and a stays consistent: {a,¬b} ∪ OB_T per b ∈ F
//        ({a} ∪ OB_T when F = ∅)}.
AtomSet z_step(const KnowledgeBase& k, const Partition& p, const AtomSet& x);

// Least fixpoint of z_step from ∅ (at most |KA| + 1 iterations).
AtomSet atmost(const KnowledgeBase& k, const Partition& p);

// Polynomial under-approximation of the greatest unfounded set:
// KA \ atmost, exact = false. Sound: the complement is always an unfounded
// set (equal to the greatest one under the head-independence conditions).
UnfoundedReport unfounded_approx(const KnowledgeBase& k, const Partition& p);

// True iff every entailment produced by a weak head-cut (per-rule head
// subsets) is already produced by one of its single-choice sub-head-cuts.
// Under this condition (plus a consistent atmost) the approximation is
// exact. Pre: p dependable. Throws GuardError when
// weak_head_cut_space(k) > kEnumerationLimit.
bool is_head_independent(const KnowledgeBase& k, const Partition& p);

} // namespace hmknf

#endif // HMKNF_UNFOUNDED_HPP
