#include "nari/transactions.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace nari {

namespace {

bool is_separator(char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_separator(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_separator(line[i])) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

} // namespace

std::vector<std::uint64_t> build_item_index(std::span<const Itemset> transactions,
                                            std::size_t num_items) {
    const std::size_t words = (transactions.size() + 63) / 64;
    std::vector<std::uint64_t> bits(num_items * words, 0);
    for (std::size_t t = 0; t < transactions.size(); ++t) {
        for (ItemId id : transactions[t]) {
            bits[id * words + t / 64] |= std::uint64_t{1} << (t % 64);
        }
    }
    return bits;
}

TransactionDB::TransactionDB(std::vector<std::string> dictionary, std::vector<Itemset> transactions)
    : dictionary_(std::move(dictionary)), transactions_(std::move(transactions)) {
    for (std::size_t i = 0; i < dictionary_.size(); ++i) {
        if (!lookup_.emplace(dictionary_[i], static_cast<ItemId>(i)).second)
            throw IngestionError("duplicate item token in dictionary: '" + dictionary_[i] + "'");
    }
    for (const auto& t : transactions_) check_ids(t);
    words_per_item_ = (transactions_.size() + 63) / 64;
    bits_ = build_item_index(transactions_, dictionary_.size());
}

const std::string& TransactionDB::item_name(ItemId id) const {
    if (id >= dictionary_.size()) throw DomainError("unknown item id " + std::to_string(id));
    return dictionary_[id];
}

std::optional<ItemId> TransactionDB::find_item(std::string_view token) const {
    if (auto it = lookup_.find(std::string(token)); it != lookup_.end()) return it->second;
    return std::nullopt;
}

std::vector<std::string> TransactionDB::item_names(const Itemset& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (ItemId id : s) out.push_back(item_name(id));
    std::sort(out.begin(), out.end());
    return out;
}

std::string TransactionDB::format(const Itemset& s) const {
    std::string out;
    for (const auto& name : item_names(s)) {
        if (!out.empty()) out += ' ';
        out += name;
    }
    return out;
}

Itemset TransactionDB::itemset_of(std::initializer_list<std::string_view> tokens) const {
    std::vector<ItemId> ids;
    for (auto tok : tokens) {
        auto id = find_item(tok);
        if (!id) throw DomainError("unknown item token '" + std::string(tok) + "'");
        ids.push_back(*id);
    }
    return Itemset(std::move(ids));
}

void TransactionDB::check_ids(const Itemset& q) const {
    if (!q.empty() && q.ids().back() >= dictionary_.size())
        throw DomainError("unknown item id " + std::to_string(q.ids().back()));
}

std::span<const std::uint64_t> TransactionDB::item_bits(ItemId id) const {
    if (id >= dictionary_.size()) throw DomainError("unknown item id " + std::to_string(id));
    return std::span<const std::uint64_t>(bits_).subspan(id * words_per_item_, words_per_item_);
}

std::uint64_t TransactionDB::support_count(const Itemset& q) const {
    check_ids(q);
    if (q.empty()) return transactions_.size();

    const std::uint64_t* first = bits_.data() + q[0] * words_per_item_;
    std::uint64_t count = 0;
    for (std::size_t w = 0; w < words_per_item_; ++w) {
        std::uint64_t acc = first[w];
        for (std::size_t j = 1; j < q.size() && acc != 0; ++j)
            acc &= bits_[q[j] * words_per_item_ + w];
        count += static_cast<std::uint64_t>(std::popcount(acc));
    }
    return count;
}

std::uint64_t TransactionDB::support_count_scan(const Itemset& q) const {
    check_ids(q);
    std::uint64_t count = 0;
    for (const auto& t : transactions_)
        if (q.is_subset_of(t)) ++count;
    return count;
}

Rational TransactionDB::support(const Itemset& q) const {
    if (transactions_.empty()) throw DomainError("support is undefined on an empty database");
    return Rational(static_cast<std::int64_t>(support_count(q)),
                    static_cast<std::int64_t>(transactions_.size()));
}

std::string TransactionDB::to_basket() const {
    std::string out;
    for (const auto& t : transactions_) {
        bool first = true;
        for (ItemId id : t) {
            if (!first) out += ", ";
            out += dictionary_[id];
            first = false;
        }
        out += '\n';
    }
    return out;
}

TransactionDB load_basket(std::string_view text) {
    std::vector<std::string> dictionary;
    std::unordered_map<std::string, ItemId> lookup;
    std::vector<Itemset> transactions;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        const std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            if (nl == std::string_view::npos) break;
            continue;
        }
        if (tokens.front().back() == ':') tokens.erase(tokens.begin());
        if (tokens.empty())
            throw IngestionError("line " + std::to_string(line_no) + ": transaction has no items", line_no);

        std::vector<ItemId> ids;
        ids.reserve(tokens.size());
        for (auto tok : tokens) {
            auto [it, inserted] = lookup.try_emplace(std::string(tok), static_cast<ItemId>(dictionary.size()));
            if (inserted) dictionary.emplace_back(tok);
            ids.push_back(it->second);
        }
        transactions.emplace_back(std::move(ids));
        if (nl == std::string_view::npos) break;
    }

    if (transactions.empty()) throw IngestionError("input contains no transactions");
    return TransactionDB(std::move(dictionary), std::move(transactions));
}

TransactionDB load_basket_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestionError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_basket(buf.str());
}

} // namespace nari
