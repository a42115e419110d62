#include "nari/synth.hpp"

#include <string>
#include <vector>

namespace nari::synth {

TransactionDB random_db(std::mt19937_64& rng, const BasketParams& params) {
    const std::size_t items = params.num_items == 0 ? 1 : params.num_items;

    std::vector<std::string> names;
    names.reserve(items);
    for (std::size_t i = 0; i < items; ++i)
        names.push_back(items <= 26 ? std::string(1, static_cast<char>('A' + i)) : "i" + std::to_string(i));

    std::uniform_int_distribution<std::size_t> pick_item(0, items - 1);
    std::vector<std::vector<ItemId>> patterns(params.num_patterns);
    for (auto& p : patterns)
        for (std::size_t j = 0; j < params.pattern_size; ++j) p.push_back(static_cast<ItemId>(pick_item(rng)));

    std::bernoulli_distribution present(params.density);
    std::bernoulli_distribution fire(0.2);

    std::vector<Itemset> transactions;
    transactions.reserve(params.num_transactions);
    for (std::size_t t = 0; t < params.num_transactions; ++t) {
        std::vector<ItemId> ids;
        for (std::size_t i = 0; i < items; ++i)
            if (present(rng)) ids.push_back(static_cast<ItemId>(i));
        for (const auto& p : patterns)
            if (fire(rng)) ids.insert(ids.end(), p.begin(), p.end());
        if (ids.empty()) ids.push_back(static_cast<ItemId>(pick_item(rng)));
        transactions.emplace_back(std::move(ids));
    }
    return TransactionDB(std::move(names), std::move(transactions));
}

} // namespace nari::synth
