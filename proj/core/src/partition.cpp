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

#include "hmknf/partition.hpp"

#include <stdexcept>

namespace hmknf {

Partition::Partition(AtomSet t, AtomSet f) : t_(std::move(t)), f_(std::move(f)) {
    if (t_.intersects(f_)) throw std::invalid_argument("partition sides overlap");
}

std::variant<Partition, Conflict> partition_join(const Partition& a, const Partition& b) {
    AtomSet t = a.t() | b.t();
    AtomSet f = a.f() | b.f();
    if (t.intersects(f)) return Conflict{t & f};
    return Partition(std::move(t), std::move(f));
}

Partition make_partition(const KnowledgeBase& k, const AtomSet& t, const AtomSet& f) {
    if (!t.is_subset_of(k.ka()) || !f.is_subset_of(k.ka()))
        throw std::invalid_argument("partition mentions atoms outside the program's K-atoms");
    return Partition(t, f); // disjointness checked by the constructor
}

bool applicable(const Rule& r, const Partition& p) {
    return r.body_pos.is_subset_of(p.t()) && r.body_neg.is_subset_of(p.f());
}

bool is_dependable(const KnowledgeBase& k, const Partition& p) {
    const OntologyOracle& oracle = k.oracle();
    if (p.f().empty()) return oracle.satisfiable_with(p.t(), {});
    for (AtomId b : p.f()) {
        Literal extra[] = {neg(b)};
        if (!oracle.satisfiable_with(p.t(), extra)) return false;
    }
    return true;
}

} // namespace hmknf
