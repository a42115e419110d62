#ifndef NARI_SYNTH_HPP
#define NARI_SYNTH_HPP

#include <cstddef>
#include <random>

#include "nari/transactions.hpp"

namespace nari::synth {

struct BasketParams {
    std::size_t num_items = 6;
    std::size_t num_transactions = 10;
    /// Probability of each item appearing in a transaction, before patterns.
    double density = 0.4;
    /// Number of planted co-occurring itemsets; each fires with probability 0.2.
    std::size_t num_patterns = 0;
    std::size_t pattern_size = 3;
};

/// Random database; every transaction holds at least one item. Items are
/// named A..Z while they fit, otherwise i0, i1, ...
TransactionDB random_db(std::mt19937_64& rng, const BasketParams& params);

} // namespace nari::synth

#endif
