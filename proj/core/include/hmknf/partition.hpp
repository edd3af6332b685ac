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

#ifndef HMKNF_PARTITION_HPP
#define HMKNF_PARTITION_HPP

#include <variant>

#include "hmknf/kb.hpp"

namespace hmknf {

// Disjoint pair (T, F) of K-atom sets: T holds atoms assumed true, F atoms
// assumed false; the rest are undecided.
class Partition {
public:
    Partition() = default;

    // Throws std::invalid_argument if t and f overlap.
    Partition(AtomSet t, AtomSet f);

    const AtomSet& t() const { return t_; }
    const AtomSet& f() const { return f_; }

    bool total(const AtomSet& ka) const { return (t_ | f_) == ka; }
    AtomSet undecided(const AtomSet& ka) const { return (ka - t_) - f_; }

    // Pointwise containment: this.t ⊆ o.t and this.f ⊆ o.f.
    bool leq(const Partition& o) const { return t_.is_subset_of(o.t_) && f_.is_subset_of(o.f_); }

    bool operator==(const Partition&) const = default;

private:
    AtomSet t_;
    AtomSet f_;
};

// Overlap discovered when two partitions disagree on some atom.
struct Conflict {
    AtomSet atoms; // nonempty: atoms claimed true by one side and false by the other

    bool operator==(const Conflict&) const = default;
};

// Componentwise union; reports the overlapping atoms instead of silently
// producing a non-disjoint pair.
std::variant<Partition, Conflict> partition_join(const Partition& a, const Partition& b);

// Validated construction from raw sets: checks disjointness and that both
// sets only mention K-atoms of k. Throws std::invalid_argument otherwise.
Partition make_partition(const KnowledgeBase& k, const AtomSet& t, const AtomSet& f);

// body+(r) ⊆ p.t and body-(r) ⊆ p.f.
bool applicable(const Rule& r, const Partition& p);

// A partition can be depended on when no single false atom is already
// forced by the true side: OB_T ∪ {¬b} is consistent for each b ∈ F, and
// OB_T itself is consistent when F is empty.
bool is_dependable(const KnowledgeBase& k, const Partition& p);

} // namespace hmknf

#endif // HMKNF_PARTITION_HPP
