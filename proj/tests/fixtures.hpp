#ifndef NARI_TESTS_FIXTURES_HPP
#define NARI_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "nari/itemset.hpp"
#include "nari/rational.hpp"
#include "nari/transactions.hpp"

namespace fixtures {

// Ten-transaction example database over items A..F.
inline constexpr std::string_view kSampleBasket =
    "T1: A, B, D\n"
    "T2: A, B, C, D\n"
    "T3: B, D\n"
    "T4: B, C, D, E\n"
    "T5: A, C, E\n"
    "T6: B, D, F\n"
    "T7: A, E, F\n"
    "T8: C, F\n"
    "T9: B, C, F\n"
    "T10: A, B, C, D, F\n";

inline const std::vector<std::string> kSampleRows = {"ABD", "ABCD", "BD", "BCDE", "ACE",
                                                      "BDF", "AEF", "CF", "BCF", "ABCDF"};

/// Rows containing every letter of `letters`, counted straight off the raw rows.
inline std::uint64_t naive_count(std::string_view letters) {
    std::uint64_t n = 0;
    for (const auto& row : kSampleRows)
        if (std::all_of(letters.begin(), letters.end(), [&](char c) { return row.find(c) != std::string::npos; }))
            ++n;
    return n;
}

inline nari::Rational naive_support(std::string_view letters) {
    return nari::Rational(static_cast<std::int64_t>(naive_count(letters)),
                          static_cast<std::int64_t>(kSampleRows.size()));
}

inline const nari::TransactionDB& sample_db() {
    static const nari::TransactionDB db = nari::load_basket(kSampleBasket);
    return db;
}

/// "ABD" -> itemset of single-letter tokens.
inline nari::Itemset iset(const nari::TransactionDB& db, std::string_view letters) {
    std::vector<nari::ItemId> ids;
    for (char c : letters) ids.push_back(*db.find_item(std::string(1, c)));
    return nari::Itemset(std::move(ids));
}

inline nari::Itemset iset(std::string_view letters) { return iset(sample_db(), letters); }

inline std::vector<nari::Itemset> family(const nari::TransactionDB& db, std::initializer_list<std::string_view> sets) {
    std::vector<nari::Itemset> out;
    for (auto s : sets) out.push_back(iset(db, s));
    nari::canonicalize(out);
    return out;
}

inline std::vector<nari::Itemset> family(std::initializer_list<std::string_view> sets) {
    return family(sample_db(), sets);
}

/// Letters of an itemset, concatenated ("ABD").
inline std::string letters(const nari::TransactionDB& db, const nari::Itemset& s) {
    std::string out;
    for (auto id : s) out += db.item_name(id);
    return out;
}

inline nari::Rational R(std::int64_t n, std::int64_t d = 1) { return nari::Rational(n, d); }

} // namespace fixtures

#endif
