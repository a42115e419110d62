// Serial transaction-pass counting vs the OpenMP bitset kernel, plus a
// full mining run, on synthetic baskets.

#include <random>

#include <benchmark/benchmark.h>

#include "nari/kernels.hpp"
#include "nari/miner.hpp"
#include "nari/synth.hpp"

namespace {

nari::TransactionDB make_db(std::size_t transactions) {
    std::mt19937_64 rng(17);
    nari::synth::BasketParams params;
    params.num_items = 40;
    params.num_transactions = transactions;
    params.density = 0.15;
    params.num_patterns = 8;
    params.pattern_size = 4;
    return nari::synth::random_db(rng, params);
}

std::vector<nari::Itemset> all_pairs_and_triples(std::size_t items) {
    std::vector<nari::Itemset> out;
    for (nari::ItemId a = 0; a < items; ++a)
        for (nari::ItemId b = a + 1; b < items; ++b) {
            out.push_back(nari::Itemset{a, b});
            for (nari::ItemId c = b + 1; c < items && c < b + 4; ++c) out.push_back(nari::Itemset{a, b, c});
        }
    nari::canonicalize(out);
    return out;
}

void BM_CountSerial(benchmark::State& state) {
    const auto db = make_db(static_cast<std::size_t>(state.range(0)));
    const auto family = all_pairs_and_triples(db.num_items());
    for (auto _ : state) benchmark::DoNotOptimize(nari::kernels::count_supports_serial(db, family));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(family.size()));
}

void BM_CountBitsetParallel(benchmark::State& state) {
    const auto db = make_db(static_cast<std::size_t>(state.range(0)));
    const auto family = all_pairs_and_triples(db.num_items());
    for (auto _ : state) benchmark::DoNotOptimize(nari::kernels::count_supports(db, family));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(family.size()));
}

void BM_Mine(benchmark::State& state) {
    const auto db = make_db(static_cast<std::size_t>(state.range(0)));
    const nari::Thresholds thr{nari::Rational(10, 100), nari::Rational(0), nari::Rational(1, 100)};
    for (auto _ : state) benchmark::DoNotOptimize(nari::mine(db, thr));
}

} // namespace

BENCHMARK(BM_CountSerial)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountBitsetParallel)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Mine)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
