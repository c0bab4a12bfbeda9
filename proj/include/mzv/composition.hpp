#pragma once

#include <compare>
#include <vector>

#include "mzv/linear_combination.hpp"

namespace mzv {

// A finite sequence of positive integers [s_1,...,s_k]; the empty sequence is
// the unit. weight = s_1 + ... + s_k, depth = k.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> entries);

    static Composition ones(int k) { return Composition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

    int weight() const { return weight_; }
    int depth() const { return static_cast<int>(entries_.size()); }
    bool is_unit() const { return entries_.empty(); }
    bool all_ones() const { return weight_ == depth(); }

    const std::vector<int>& entries() const { return entries_; }
    int entry(int pos) const { return entries_[static_cast<std::size_t>(pos)]; }

    // Copy with entry at 0-based `pos` raised by one.
    Composition raised(int pos) const;
    // Copy with entry at 0-based `pos` lowered by one; the entry must be >= 2.
    Composition lowered(int pos) const;

    Composition prefix(int n) const;
    Composition suffix_from(int n) const;
    Composition prepended(int first) const;

    friend bool operator==(const Composition&, const Composition&) = default;

    // Canonical order: (weight, depth, lexicographic entries).
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
        if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
    int weight_ = 0;
};

using HVector = LinearCombination<Composition>;
using HTensorVector = LinearCombination<std::pair<Composition, Composition>>;

// All compositions of the given weight, in canonical order.
std::vector<Composition> compositions_of_weight(int w);
// Unit plus all compositions of weight 1..max_weight, in canonical order.
std::vector<Composition> compositions_up_to(int max_weight);

}  // namespace mzv
