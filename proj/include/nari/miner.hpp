#ifndef NARI_MINER_HPP
#define NARI_MINER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nari/itemset.hpp"
#include "nari/measures.hpp"
#include "nari/transactions.hpp"

namespace nari {

/// Which family the C_k subset test is run against.
enum class CandidateFilter {
    literal, // the pruned positive itemsets of interest of level k-1
    freq,    // every frequent (k-1)-itemset, as in classic Apriori
};

enum class Termination {
    temp_empty,          // stop when a level generates no itemsets
    both_families_empty, // stop when level k-1 kept no positive and no negative itemsets
};

struct MinerConfig {
    CandidateFilter candidate_filter = CandidateFilter::literal;
    Termination termination = Termination::temp_empty;
};

/// Frequent itemsets by level: key i holds Freq_i.
using FreqLevels = std::map<std::size_t, std::vector<Itemset>>;

/// Everything computed in one pass of the level-wise search. All families
/// are canonical (sorted, unique).
struct LevelState {
    std::size_t k = 0;
    std::vector<Itemset> temp;                 // unions of two earlier frequent itemsets
    std::vector<std::uint64_t> counts;         // parallel to temp
    std::vector<Itemset> candidates;           // temp members passing the subset test
    std::vector<Itemset> freq;                 // candidates with support >= minsprt
    std::vector<Itemset> positive_pruned;      // freq members with an interesting partition
    std::vector<InterestReport> positive_best; // parallel to positive_pruned
    std::vector<Itemset> nn;                   // temp \ freq
    std::vector<Itemset> negative_interesting; // nn members with an interesting frequent-part partition
    std::vector<InterestReport> negative_best; // parallel to negative_interesting

    std::optional<std::uint64_t> count_of(const Itemset& s) const;
};

struct MiningStats {
    std::uint64_t frequent_count = 0;             // frequent itemsets of size >= 2
    std::uint64_t positive_interesting_count = 0; // |PS|
    std::uint64_t negative_candidate_count = 0;   // sum of |NN_k|
    std::uint64_t negative_interesting_count = 0; // |NS|
};

struct MiningResult {
    std::vector<Itemset> freq1;
    std::vector<Itemset> ps;
    std::vector<Itemset> ns;
    std::vector<LevelState> levels;
    MiningStats stats;
};

std::vector<Itemset> frequent_singletons(const TransactionDB& db, const Thresholds& thr);

/// All k-itemsets that are the union of two members of Freq_1..Freq_{k-1}.
std::vector<Itemset> generate_temp(const FreqLevels& freq_levels, std::size_t k);

/// Support count of every member of `temp`, positionally.
std::vector<std::uint64_t> count_level(const TransactionDB& db, std::span<const Itemset> temp);

LevelState run_level(const TransactionDB& db, const Thresholds& thr, const MinerConfig& cfg,
                     const FreqLevels& freq_levels, std::span<const Itemset> prev_positive, std::size_t k);

/// Level-wise search for positive (PS) and negative (NS) itemsets of interest.
MiningResult mine(const TransactionDB& db, const Thresholds& thr, const MinerConfig& cfg = {});

} // namespace nari

#endif
