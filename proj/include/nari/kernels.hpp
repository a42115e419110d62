#ifndef NARI_KERNELS_HPP
#define NARI_KERNELS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nari/itemset.hpp"
#include "nari/transactions.hpp"

namespace nari::kernels {

/// Support counts for a family of itemsets, one entry per input position.
///
/// Parallel over itemsets with OpenMP; each count is a bitset intersection,
/// so the result does not depend on the thread count.
std::vector<std::uint64_t> count_supports(const TransactionDB& db, std::span<const Itemset> family);

/// Serial reference: one pass over the transactions, incrementing every
/// family member contained in the current transaction.
std::vector<std::uint64_t> count_supports_serial(const TransactionDB& db, std::span<const Itemset> family);

/// Sets the OpenMP team size for subsequent kernels. No-op without OpenMP.
void set_num_threads(int n);
int max_threads();

} // namespace nari::kernels

#endif
