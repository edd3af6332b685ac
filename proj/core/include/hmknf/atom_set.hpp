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

#ifndef HMKNF_ATOM_SET_HPP
#define HMKNF_ATOM_SET_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hmknf {

using AtomId = std::uint32_t;

// Fixed-universe bitset over atom ids. All sets attached to one knowledge
// base share the same universe (the size of its atom table), which makes the
// bitwise operations well-defined and keeps iteration order deterministic
// (ascending id).
class AtomSet {
public:
    AtomSet() = default;

    explicit AtomSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    AtomSet(std::size_t universe, std::initializer_list<AtomId> atoms) : AtomSet(universe) {
        for (AtomId a : atoms) insert(a);
    }

    std::size_t universe() const { return universe_; }

    bool contains(AtomId a) const {
        assert(a < universe_);
        return (words_[a >> 6] >> (a & 63)) & 1u;
    }

    void insert(AtomId a) {
        assert(a < universe_);
        words_[a >> 6] |= std::uint64_t(1) << (a & 63);
    }

    void erase(AtomId a) {
        assert(a < universe_);
        words_[a >> 6] &= ~(std::uint64_t(1) << (a & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    AtomSet& operator|=(const AtomSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    AtomSet& operator&=(const AtomSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // Set difference.
    AtomSet& operator-=(const AtomSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
    friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
    friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }

    bool operator==(const AtomSet& o) const = default;

    bool is_subset_of(const AtomSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const AtomSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Iterates set members in ascending id order.
    class const_iterator {
    public:
        const_iterator(const AtomSet* s, std::size_t word, std::uint64_t rest)
            : set_(s), word_(word), rest_(rest) {
            settle();
        }

        AtomId operator*() const {
            return static_cast<AtomId>(word_ * 64 + static_cast<std::size_t>(std::countr_zero(rest_)));
        }

        const_iterator& operator++() {
            rest_ &= rest_ - 1; // drop lowest set bit
            settle();
            return *this;
        }

        bool operator==(const const_iterator& o) const {
            return word_ == o.word_ && rest_ == o.rest_;
        }

    private:
        void settle() {
            while (rest_ == 0 && word_ + 1 < set_->words_.size()) rest_ = set_->words_[++word_];
            if (rest_ == 0) word_ = set_->words_.size(); // end marker
        }

        const AtomSet* set_;
        std::size_t word_;
        std::uint64_t rest_;
    };

    const_iterator begin() const {
        if (words_.empty()) return end();
        return const_iterator(this, 0, words_[0]);
    }

    const_iterator end() const { return const_iterator(this, words_.size(), 0); }

    std::vector<AtomId> to_vector() const {
        std::vector<AtomId> out;
        out.reserve(count());
        for (AtomId a : *this) out.push_back(a);
        return out;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace hmknf

#endif // HMKNF_ATOM_SET_HPP
