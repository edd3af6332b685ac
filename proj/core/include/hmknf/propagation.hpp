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

#ifndef HMKNF_PROPAGATION_HPP
#define HMKNF_PROPAGATION_HPP

#include <optional>
#include <variant>

#include "hmknf/partition.hpp"

namespace hmknf {

// Why a propagation attempt failed.
struct PropagationConflict {
    enum class Kind {
        Overlap,       // some atom was derived both true and false
        Dependability, // the fixpoint's true side refutes a false atom (or is itself inconsistent)
    };

    Kind kind;
    AtomSet atoms; // Overlap: the overlapping atoms; Dependability: the refuted false atom, or empty when OB_T alone is inconsistent
};

struct PropagationResult {
    std::variant<Partition, PropagationConflict> value;

    bool ok() const { return std::holds_alternative<Partition>(value); }
    const Partition& partition() const { return std::get<Partition>(value); }
    const PropagationConflict& conflict() const { return std::get<PropagationConflict>(value); }
};

// Deterministic true-side consequences of the accumulated partition:
// atoms entailed by OB_{acc.t}, plus heads forced by rules whose head has
// exactly one atom left outside acc.f and whose body holds under acc.
// Pre: base ⊑ acc.
AtomSet t_step(const KnowledgeBase& k, const Partition& base, const Partition& acc);

// One two-sided update relative to the fixed base partition:
//   ( t_step(k, base, acc) ∪ base.t , (KA \ atmost(k, acc)) ∪ base.f ).
// The pair may overlap; the caller joins and reports.
struct TwoSided {
    AtomSet t;
    AtomSet f;
};
TwoSided w_step(const KnowledgeBase& k, const Partition& base, const Partition& acc);

// Iterates acc ← acc ⊔ w_step(k, p, acc) to a fixpoint (chaotic order,
// both sides joined each round; at most 2|KA| + 2 rounds). Reports an
// overlap conflict as soon as the join fails, and a dependability conflict
// if the fixpoint's false side is refuted by its true side.
PropagationResult propagate(const KnowledgeBase& k, const Partition& p);

} // namespace hmknf

#endif // HMKNF_PROPAGATION_HPP
