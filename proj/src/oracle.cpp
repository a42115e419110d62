#include "nari/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace nari {

namespace {

using i128 = __int128;

struct Fraction128 {
    i128 num;
    i128 den;
};

Fraction128 widen(const Rational& r) { return {r.numerator(), r.denominator()}; }

// count / n >= num / den
bool reaches(std::uint64_t count, std::uint64_t n, const Fraction128& thr) {
    return static_cast<i128>(count) * thr.den >= thr.num * static_cast<i128>(n);
}

} // namespace

std::vector<Itemset> OracleResult::ps_itemsets() const {
    std::vector<Itemset> out;
    for (const auto& w : ps) out.push_back(w.itemset);
    return out;
}

std::vector<Itemset> OracleResult::ns_itemsets() const {
    std::vector<Itemset> out;
    for (const auto& w : ns) out.push_back(w.itemset);
    return out;
}

OracleResult oracle_mine(const TransactionDB& db, const Thresholds& thr) {
    if (db.num_items() > kOracleMaxItems)
        throw OracleCapacityError("oracle supports at most " + std::to_string(kOracleMaxItems) +
                                  " items, database has " + std::to_string(db.num_items()));
    thr.validate();

    const std::uint64_t n = db.num_transactions();
    const Fraction128 minsprt = widen(thr.minsprt);
    const Fraction128 mininterest = widen(thr.mininterest);

    auto count = [&](const Itemset& s) { return db.support_count_scan(s); };

    std::vector<ItemId> universe;
    for (ItemId id = 0; id < db.num_items(); ++id)
        if (reaches(count(Itemset{id}), n, minsprt)) universe.push_back(id);

    const std::size_t u = universe.size();
    const std::uint64_t subsets = std::uint64_t{1} << u;

    auto itemset_of_mask = [&](std::uint64_t mask) {
        std::vector<ItemId> ids;
        for (std::size_t i = 0; i < u; ++i)
            if ((mask >> i) & 1u) ids.push_back(universe[i]);
        return Itemset(std::move(ids));
    };

    std::vector<std::uint64_t> counts(subsets);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) counts[mask] = count(itemset_of_mask(mask));

    // Collected by mask, emitted in (size, lexicographic) order afterwards.
    std::vector<OracleWitness> ps;
    std::vector<OracleWitness> ns;

    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        if (std::popcount(mask) < 2) continue;
        const i128 cq = static_cast<i128>(counts[mask]);
        const bool frequent = reaches(counts[mask], n, minsprt);

        // |cq/n - cx*cy/n^2| >= mi  <=>  |cq*n - cx*cy| * den >= num * n^2
        bool found = false;
        i128 best_gap = -1;
        std::uint64_t best_left = 0;
        const std::uint64_t low = mask & (~mask + 1);
        for (std::uint64_t left = (mask - 1) & mask; left != 0; left = (left - 1) & mask) {
            if ((left & low) == 0) continue; // each unordered split once
            const std::uint64_t right = mask ^ left;
            if (!frequent && !(reaches(counts[left], n, minsprt) && reaches(counts[right], n, minsprt)))
                continue;
            i128 gap = cq * static_cast<i128>(n) -
                       static_cast<i128>(counts[left]) * static_cast<i128>(counts[right]);
            if (gap < 0) gap = -gap;
            if (gap * mininterest.den >= mininterest.num * static_cast<i128>(n) * static_cast<i128>(n)) {
                found = true;
                if (gap > best_gap || (gap == best_gap && left < best_left)) {
                    best_gap = gap;
                    best_left = left;
                }
            }
        }
        if (!found) continue;

        OracleWitness w{itemset_of_mask(mask), itemset_of_mask(best_left), itemset_of_mask(mask ^ best_left),
                        Rational(static_cast<std::int64_t>(best_gap), static_cast<std::int64_t>(n * n))};
        (frequent ? ps : ns).push_back(std::move(w));
    }

    auto by_itemset = [](const OracleWitness& a, const OracleWitness& b) { return a.itemset < b.itemset; };
    std::sort(ps.begin(), ps.end(), by_itemset);
    std::sort(ns.begin(), ns.end(), by_itemset);
    return OracleResult{std::move(ps), std::move(ns)};
}

} // namespace nari
