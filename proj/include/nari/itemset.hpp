#ifndef NARI_ITEMSET_HPP
#define NARI_ITEMSET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace nari {

using ItemId = std::uint32_t;

/// Canonical set of item ids: strictly increasing, no duplicates.
///
/// Itemsets order by size first, then lexicographically by id, which is the
/// order every family in the miner is kept and reported in.
class Itemset {
public:
    Itemset() = default;
    Itemset(std::initializer_list<ItemId> ids);
    explicit Itemset(std::vector<ItemId> ids);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    std::span<const ItemId> ids() const noexcept { return ids_; }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    ItemId operator[](std::size_t i) const { return ids_[i]; }

    bool contains(ItemId id) const noexcept;
    bool is_subset_of(const Itemset& other) const noexcept;
    bool disjoint_with(const Itemset& other) const noexcept;

    Itemset unite(const Itemset& other) const;
    Itemset minus(const Itemset& other) const;
    /// Copy with the element at `pos` removed.
    Itemset without_position(std::size_t pos) const;

    /// Sub-itemset selected by the low `size()` bits of `mask`.
    Itemset select(std::uint64_t mask) const;

    friend bool operator==(const Itemset&, const Itemset&) = default;
    friend std::strong_ordering operator<=>(const Itemset& a, const Itemset& b);

private:
    std::vector<ItemId> ids_;
};

struct ItemsetHash {
    std::size_t operator()(const Itemset& s) const noexcept;
};

/// Sorts into canonical family order and drops duplicates.
void canonicalize(std::vector<Itemset>& family);

/// Binary search membership on a canonical family.
bool family_contains(std::span<const Itemset> family, const Itemset& s);

} // namespace nari

#endif
