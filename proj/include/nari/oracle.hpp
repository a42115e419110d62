#ifndef NARI_ORACLE_HPP
#define NARI_ORACLE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nari/itemset.hpp"
#include "nari/measures.hpp"
#include "nari/transactions.hpp"

namespace nari {

class OracleCapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Best split found by the oracle for one itemset.
struct OracleWitness {
    Itemset itemset;
    Itemset left;
    Itemset right;
    Rational abs_leverage;
};

struct OracleResult {
    std::vector<OracleWitness> ps;
    std::vector<OracleWitness> ns;

    std::vector<Itemset> ps_itemsets() const;
    std::vector<Itemset> ns_itemsets() const;
};

inline constexpr std::size_t kOracleMaxItems = 20;

/// Exhaustive enumeration of every itemset of two or more frequent items.
/// Counts by naive transaction scan and compares leverage in integer
/// arithmetic; shares nothing with the level-wise miner.
OracleResult oracle_mine(const TransactionDB& db, const Thresholds& thr);

} // namespace nari

#endif
