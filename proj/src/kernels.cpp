#include "nari/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nari::kernels {

std::vector<std::uint64_t> count_supports(const TransactionDB& db, std::span<const Itemset> family) {
    std::vector<std::uint64_t> counts(family.size(), 0);
    const auto n = static_cast<std::int64_t>(family.size());

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        counts[static_cast<std::size_t>(i)] = db.support_count(family[static_cast<std::size_t>(i)]);
    }
    return counts;
}

std::vector<std::uint64_t> count_supports_serial(const TransactionDB& db, std::span<const Itemset> family) {
    std::vector<std::uint64_t> counts(family.size(), 0);
    for (const auto& t : db.transactions()) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (family[i].is_subset_of(t)) ++counts[i];
        }
    }
    return counts;
}

void set_num_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace nari::kernels
