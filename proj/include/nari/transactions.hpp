#ifndef NARI_TRANSACTIONS_HPP
#define NARI_TRANSACTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nari/itemset.hpp"
#include "nari/rational.hpp"

namespace nari {

/// Malformed or empty basket input. `line()` is 0 when no single line is at fault.
class IngestionError : public std::runtime_error {
public:
    IngestionError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An itemset referenced an id outside the item dictionary.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Immutable transaction database with a per-item transaction bitset index.
///
/// Item ids are dense, assigned in order of first appearance in the input.
/// Bit `t` of item `i`'s row is set iff transaction `t` contains item `i`;
/// the support count of an itemset is the popcount of the AND of its rows.
class TransactionDB {
public:
    TransactionDB(std::vector<std::string> dictionary, std::vector<Itemset> transactions);

    std::size_t num_items() const noexcept { return dictionary_.size(); }
    std::size_t num_transactions() const noexcept { return transactions_.size(); }
    std::span<const Itemset> transactions() const noexcept { return transactions_; }

    const std::string& item_name(ItemId id) const;
    std::optional<ItemId> find_item(std::string_view token) const;
    /// Tokens of `s`, sorted bytewise.
    std::vector<std::string> item_names(const Itemset& s) const;
    /// item_names joined by spaces, e.g. "A B D".
    std::string format(const Itemset& s) const;
    /// Builds an itemset from tokens; throws DomainError on an unknown token.
    Itemset itemset_of(std::initializer_list<std::string_view> tokens) const;

    /// Number of transactions containing every item of `q` (bitset path).
    std::uint64_t support_count(const Itemset& q) const;
    /// Same as support_count, by a direct scan of the transaction list.
    std::uint64_t support_count_scan(const Itemset& q) const;
    /// support_count(q) / num_transactions() as an exact rational.
    Rational support(const Itemset& q) const;

    std::size_t words_per_item() const noexcept { return words_per_item_; }
    std::span<const std::uint64_t> item_bits(ItemId id) const;

    /// Basket text, one transaction per line, tokens joined by ", ".
    std::string to_basket() const;

private:
    void check_ids(const Itemset& q) const;

    std::vector<std::string> dictionary_;
    std::unordered_map<std::string, ItemId> lookup_;
    std::vector<Itemset> transactions_;
    std::size_t words_per_item_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Rebuilds the row-major item bitset index from a transaction list.
std::vector<std::uint64_t> build_item_index(std::span<const Itemset> transactions,
                                            std::size_t num_items);

/// Parses basket text: one transaction per line, tokens separated by commas
/// and/or whitespace, blank lines skipped, an optional leading "T1:" style
/// id token ignored. Duplicate tokens in a line collapse.
TransactionDB load_basket(std::string_view text);
TransactionDB load_basket_file(const std::filesystem::path& path);

} // namespace nari

#endif
