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

#include "hmknf/propagation.hpp"

#include <cassert>

#include "hmknf/unfounded.hpp"

namespace hmknf {

AtomSet t_step(const KnowledgeBase& k, const Partition& base, const Partition& acc) {
    assert(base.leq(acc));
    (void)base;
    const OntologyOracle& oracle = k.oracle();
    AtomSet result(k.universe());
    for (AtomId a : k.ka())
        if (oracle.entails(acc.t(), a)) result.insert(a);
    for (const Rule& r : k.rules()) {
        AtomSet alive = r.head - acc.f();
        if (alive.count() != 1) continue;
        if (!r.body_pos.is_subset_of(acc.t()) || !r.body_neg.is_subset_of(acc.f())) continue;
        result |= alive;
    }
    return result;
}

TwoSided w_step(const KnowledgeBase& k, const Partition& base, const Partition& acc) {
    return {t_step(k, base, acc) | base.t(), (k.ka() - atmost(k, acc)) | base.f()};
}

PropagationResult propagate(const KnowledgeBase& k, const Partition& p) {
    Partition acc = p;
    std::size_t rounds = 0;
    for (;;) {
        TwoSided step = w_step(k, p, acc);
        AtomSet t = acc.t() | step.t;
        AtomSet f = acc.f() | step.f;
        if (t.intersects(f))
            return {PropagationConflict{PropagationConflict::Kind::Overlap, t & f}};
        if (t == acc.t() && f == acc.f()) break;
        acc = Partition(std::move(t), std::move(f));
        ++rounds;
        assert(rounds <= 2 * k.ka().count() + 2);
        (void)rounds;
    }
    // The fixpoint keeps T and F disjoint, but the true side may still
    // semantically refute a false atom; that is a conflict, not a usable
    // partition.
    if (acc.f().empty()) {
        if (!k.oracle().satisfiable_with(acc.t(), {}))
            return {PropagationConflict{PropagationConflict::Kind::Dependability, AtomSet(k.universe())}};
    } else {
        for (AtomId b : acc.f()) {
            Literal extra[] = {neg(b)};
            if (!k.oracle().satisfiable_with(acc.t(), extra)) {
                AtomSet refuted(k.universe());
                refuted.insert(b);
                return {PropagationConflict{PropagationConflict::Kind::Dependability, std::move(refuted)}};
            }
        }
    }
    return {std::move(acc)};
}

} // namespace hmknf
