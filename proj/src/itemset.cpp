#include "nari/itemset.hpp"

#include <algorithm>
#include <iterator>

namespace nari {

Itemset::Itemset(std::initializer_list<ItemId> ids) : Itemset(std::vector<ItemId>(ids)) {}

Itemset::Itemset(std::vector<ItemId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Itemset::contains(ItemId id) const noexcept {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Itemset::is_subset_of(const Itemset& other) const noexcept {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool Itemset::disjoint_with(const Itemset& other) const noexcept {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
    }
    return true;
}

Itemset Itemset::unite(const Itemset& other) const {
    Itemset out;
    out.ids_.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out.ids_));
    return out;
}

Itemset Itemset::minus(const Itemset& other) const {
    Itemset out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
    return out;
}

Itemset Itemset::without_position(std::size_t pos) const {
    Itemset out;
    out.ids_.reserve(ids_.size() - 1);
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (i != pos) out.ids_.push_back(ids_[i]);
    return out;
}

Itemset Itemset::select(std::uint64_t mask) const {
    Itemset out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if ((mask >> i) & 1u) out.ids_.push_back(ids_[i]);
    return out;
}

std::strong_ordering operator<=>(const Itemset& a, const Itemset& b) {
    if (auto c = a.ids_.size() <=> b.ids_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.ids_.begin(), a.ids_.end(),
                                                  b.ids_.begin(), b.ids_.end());
}

std::size_t ItemsetHash::operator()(const Itemset& s) const noexcept {
    // FNV-1a over the ids.
    std::uint64_t h = 1469598103934665603ull;
    for (ItemId id : s) {
        h ^= id;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

void canonicalize(std::vector<Itemset>& family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

bool family_contains(std::span<const Itemset> family, const Itemset& s) {
    return std::binary_search(family.begin(), family.end(), s);
}

} // namespace nari
