#include "nari/miner.hpp"

#include <algorithm>
#include <unordered_set>

#include "nari/kernels.hpp"

namespace nari {

namespace {

bool is_frequent(std::uint64_t count, std::size_t num_transactions, const Rational& minsprt) {
    return Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(num_transactions)) >= minsprt;
}

bool has_subset_in(const Itemset& s, std::span<const Itemset> reference) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (family_contains(reference, s.without_position(i))) return true;
    return false;
}

/// Keeps the members of `family` for which `evaluate` yields a non-empty
/// report list, recording the best report of each. Parallel over members.
template <class Evaluate>
void select_interesting(std::span<const Itemset> family, Evaluate evaluate,
                        std::vector<Itemset>& kept, std::vector<InterestReport>& best) {
    std::vector<std::optional<InterestReport>> found(family.size());
    const auto n = static_cast<std::int64_t>(family.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const auto reports = evaluate(family[idx]);
        found[idx] = best_report(reports);
    }

    for (std::size_t i = 0; i < family.size(); ++i) {
        if (found[i]) {
            kept.push_back(family[i]);
            best.push_back(std::move(*found[i]));
        }
    }
}

} // namespace

std::optional<std::uint64_t> LevelState::count_of(const Itemset& s) const {
    auto it = std::lower_bound(temp.begin(), temp.end(), s);
    if (it == temp.end() || *it != s) return std::nullopt;
    return counts[static_cast<std::size_t>(it - temp.begin())];
}

std::vector<Itemset> frequent_singletons(const TransactionDB& db, const Thresholds& thr) {
    std::vector<Itemset> out;
    for (ItemId id = 0; id < db.num_items(); ++id) {
        Itemset single{id};
        if (is_frequent(db.support_count(single), db.num_transactions(), thr.minsprt))
            out.push_back(std::move(single));
    }
    return out;
}

std::vector<Itemset> generate_temp(const FreqLevels& freq_levels, std::size_t k) {
    std::vector<const Itemset*> pool;
    for (const auto& [level, family] : freq_levels) {
        if (level == 0 || level >= k) continue;
        for (const auto& s : family) pool.push_back(&s);
    }

    std::vector<Itemset> out;
    const auto n = static_cast<std::int64_t>(pool.size());

#pragma omp parallel
    {
        std::unordered_set<Itemset, ItemsetHash> local;
#pragma omp for schedule(dynamic, 8) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const Itemset& a = *pool[static_cast<std::size_t>(i)];
            for (std::int64_t j = i + 1; j < n; ++j) {
                const Itemset& b = *pool[static_cast<std::size_t>(j)];
                if (a.size() + b.size() < k) continue;
                Itemset u = a.unite(b);
                if (u.size() == k) local.insert(std::move(u));
            }
        }
#pragma omp critical(nari_generate_temp)
        out.insert(out.end(), local.begin(), local.end());
    }

    canonicalize(out);
    return out;
}

std::vector<std::uint64_t> count_level(const TransactionDB& db, std::span<const Itemset> temp) {
    return kernels::count_supports(db, temp);
}

LevelState run_level(const TransactionDB& db, const Thresholds& thr, const MinerConfig& cfg,
                     const FreqLevels& freq_levels, std::span<const Itemset> prev_positive, std::size_t k) {
    LevelState level;
    level.k = k;
    level.temp = generate_temp(freq_levels, k);
    level.counts = count_level(db, level.temp);

    static const std::vector<Itemset> none;
    auto freq_at = [&](std::size_t i) -> const std::vector<Itemset>& {
        auto it = freq_levels.find(i);
        return it == freq_levels.end() ? none : it->second;
    };
    // Level 2 always filters against Freq_1.
    std::span<const Itemset> reference = freq_at(k - 1);
    if (k > 2 && cfg.candidate_filter == CandidateFilter::literal) reference = prev_positive;

    for (std::size_t i = 0; i < level.temp.size(); ++i) {
        const Itemset& s = level.temp[i];
        if (!has_subset_in(s, reference)) continue;
        level.candidates.push_back(s);
        if (is_frequent(level.counts[i], db.num_transactions(), thr.minsprt)) level.freq.push_back(s);
    }
    std::set_difference(level.temp.begin(), level.temp.end(), level.freq.begin(), level.freq.end(),
                        std::back_inserter(level.nn));

    const SupportFn support = [&db](const Itemset& s) { return db.support(s); };
    select_interesting(
        level.freq, [&](const Itemset& q) { return interesting_positive_partitions(support, q, thr); },
        level.positive_pruned, level.positive_best);
    select_interesting(
        level.nn, [&](const Itemset& q) { return negative_partitions(support, q, thr); },
        level.negative_interesting, level.negative_best);
    return level;
}

MiningResult mine(const TransactionDB& db, const Thresholds& thr, const MinerConfig& cfg) {
    thr.validate();
    if (db.num_transactions() == 0) throw DomainError("cannot mine an empty database");

    MiningResult result;
    result.freq1 = frequent_singletons(db, thr);

    FreqLevels freq_levels;
    freq_levels[1] = result.freq1;
    std::vector<Itemset> prev_positive = result.freq1;
    bool prev_negative_empty = true;

    for (std::size_t k = 2;; ++k) {
        if (cfg.termination == Termination::both_families_empty && k > 2 && prev_positive.empty() &&
            prev_negative_empty)
            break;

        LevelState level = run_level(db, thr, cfg, freq_levels, prev_positive, k);
        if (level.temp.empty()) break;

        freq_levels[k] = level.freq;
        prev_positive = level.positive_pruned;
        prev_negative_empty = level.negative_interesting.empty();

        result.stats.frequent_count += level.freq.size();
        result.stats.negative_candidate_count += level.nn.size();
        result.ps.insert(result.ps.end(), level.positive_pruned.begin(), level.positive_pruned.end());
        result.ns.insert(result.ns.end(), level.negative_interesting.begin(), level.negative_interesting.end());
        result.levels.push_back(std::move(level));
    }

    result.stats.positive_interesting_count = result.ps.size();
    result.stats.negative_interesting_count = result.ns.size();
    return result;
}

} // namespace nari
