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

#ifndef HMKNF_ATOM_TABLE_HPP
#define HMKNF_ATOM_TABLE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hmknf/atom_set.hpp"

namespace hmknf {

// True iff name matches [a-z][A-Za-z0-9_]* and is not the reserved word
// `not` (which the text format uses for default negation).
bool is_valid_atom_name(std::string_view name);

// Bijection between atom names and dense ids 0..size()-1, in interning order.
class AtomTable {
public:
    // Returns the existing id or assigns the next free one.
    // Throws std::invalid_argument if the name is not a valid atom token.
    AtomId intern(std::string_view name);

    std::optional<AtomId> find(std::string_view name) const;

    const std::string& name(AtomId id) const { return names_.at(id); }

    std::size_t size() const { return names_.size(); }

    bool operator==(const AtomTable& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> ids_;
};

} // namespace hmknf

#endif // HMKNF_ATOM_TABLE_HPP
