#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nari/kernels.hpp"
#include "nari/miner.hpp"
#include "nari/synth.hpp"

using namespace fixtures;
using nari::CandidateFilter;
using nari::MinerConfig;
using nari::Termination;
using nari::Thresholds;

namespace {

Thresholds sample_thr() { return Thresholds{R(3, 10), R(0), R(7, 100)}; }

nari::FreqLevels sample_freq_levels() {
    nari::FreqLevels levels;
    levels[1] = family({"A", "B", "C", "D", "E", "F"});
    levels[2] = family({"AB", "AC", "AD", "BC", "BD", "BF", "CD", "CF"});
    levels[3] = family({"ABD", "BCD"});
    levels[4] = {};
    return levels;
}

bool same_levels(const nari::MiningResult& a, const nari::MiningResult& b) {
    if (a.levels.size() != b.levels.size()) return false;
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
        const auto& x = a.levels[i];
        const auto& y = b.levels[i];
        if (x.k != y.k || x.temp != y.temp || x.counts != y.counts || x.candidates != y.candidates ||
            x.freq != y.freq || x.positive_pruned != y.positive_pruned || x.nn != y.nn ||
            x.negative_interesting != y.negative_interesting)
            return false;
        for (std::size_t j = 0; j < x.positive_best.size(); ++j)
            if (!(x.positive_best[j].partition == y.positive_best[j].partition)) return false;
        for (std::size_t j = 0; j < x.negative_best.size(); ++j)
            if (!(x.negative_best[j].partition == y.negative_best[j].partition)) return false;
    }
    return a.ps == b.ps && a.ns == b.ns;
}

} // namespace

TEST_CASE("frequent_singletons") {
    const auto& db = sample_db();
    CHECK(nari::frequent_singletons(db, sample_thr()) == family({"A", "B", "C", "D", "E", "F"}));
    CHECK(nari::frequent_singletons(db, Thresholds{R(0), R(0), R(0)}).size() == 6);
    CHECK(nari::frequent_singletons(db, Thresholds{R(55, 100), R(0), R(0)}) == family({"B", "C", "D"}));
}

TEST_CASE("generate_temp") {
    const auto levels = sample_freq_levels();
    CHECK(nari::generate_temp(levels, 2) ==
          family({"AB", "AC", "AD", "AE", "AF", "BC", "BD", "BE", "BF", "CD", "CE", "CF", "DE", "DF", "EF"}));
    CHECK(nari::generate_temp(levels, 5) == family({"ABCDF"}));

    // Strict pairwise unions: AEF and DEF are not generated, ACDF = AD u CF is.
    const auto temp3 = nari::generate_temp(levels, 3);
    CHECK(temp3.size() == 18);
    CHECK_FALSE(nari::family_contains(temp3, iset("AEF")));
    CHECK_FALSE(nari::family_contains(temp3, iset("DEF")));
    const auto temp4 = nari::generate_temp(levels, 4);
    CHECK(temp4 == family({"ABCD", "ABCF", "ABDE", "ABDF", "ACDF", "BCDE", "BCDF"}));

    nari::FreqLevels only_a;
    only_a[1] = family({"A"});
    CHECK(nari::generate_temp(only_a, 2).empty());
    CHECK(nari::generate_temp(levels, 7).empty());
}

TEST_CASE("count_level") {
    const auto levels = sample_freq_levels();
    const auto temp2 = nari::generate_temp(levels, 2);
    const auto counts2 = nari::count_level(sample_db(), temp2);
    REQUIRE(counts2.size() == temp2.size());
    for (std::size_t i = 0; i < temp2.size(); ++i) {
        CHECK(counts2[i] == naive_count(letters(sample_db(), temp2[i])));
        CHECK(counts2[i] == sample_db().support_count(temp2[i]));
    }
    const auto at = [&](std::string_view s) {
        auto it = std::lower_bound(temp2.begin(), temp2.end(), iset(s));
        return counts2[static_cast<std::size_t>(it - temp2.begin())];
    };
    CHECK(at("BD") == 6);
    CHECK(at("DE") == 1);

    CHECK(nari::count_level(sample_db(), {}).empty());

    const auto temp4 = nari::generate_temp(levels, 4);
    const auto counts4 = nari::count_level(sample_db(), temp4);
    CHECK(counts4[0] == 2); // ABCD: T2 and T10
    CHECK(naive_count("ABCD") == 2);
}

TEST_CASE("run_level on the sample") {
    const auto& db = sample_db();
    const auto levels = sample_freq_levels();
    const MinerConfig cfg;

    const auto l2 = nari::run_level(db, sample_thr(), cfg, levels, levels.at(1), 2);
    CHECK(l2.freq == family({"AB", "AC", "AD", "BC", "BD", "BF", "CD", "CF"}));
    CHECK(l2.positive_pruned == family({"BD"}));
    CHECK(l2.nn == family({"AE", "AF", "BE", "CE", "DE", "DF", "EF"}));
    CHECK(l2.negative_interesting == family({"BE", "DE", "DF"}));
    CHECK(l2.count_of(iset("BD")) == 6u);
    CHECK_FALSE(l2.count_of(iset("ABC")).has_value());

    const auto l3 = nari::run_level(db, sample_thr(), cfg, levels, family({"BD"}), 3);
    CHECK(l3.candidates == family({"ABD", "BCD", "BDE", "BDF"}));
    CHECK(l3.positive_pruned == family({"ABD", "BCD"}));
    CHECK(l3.negative_interesting == family({"ABE", "ADE", "BDE", "BDF", "BEF", "CDF", "CEF"}));
    REQUIRE(l3.positive_best.size() == 2);
    CHECK(l3.positive_best[0].abs_leverage == R(12, 100));
    CHECK(l3.positive_best[1].abs_leverage == R(9, 100));

    const auto l5 = nari::run_level(db, sample_thr(), cfg, levels, {}, 5);
    CHECK(l5.temp == family({"ABCDF"}));
    CHECK(l5.freq.empty());
    CHECK(l5.negative_interesting.empty());
}

TEST_CASE("mine on the sample") {
    const auto& db = sample_db();
    const auto res = nari::mine(db, sample_thr());
    CHECK(res.ps == family({"BD", "ABD", "BCD"}));
    CHECK(res.ns == family({"BE", "DE", "DF", "ABE", "ADE", "BDE", "BDF", "BEF", "CDF", "CEF", "ABCD", "ABDE",
                            "BCDF"}));
    REQUIRE(res.levels.size() == 4);
    CHECK(res.levels.back().k == 5);
    CHECK(res.stats.frequent_count == 10);
    CHECK(res.stats.positive_interesting_count == 3);
    CHECK(res.stats.negative_candidate_count == 31);
    CHECK(res.stats.negative_interesting_count == 13);
}

TEST_CASE("mine agrees across candidate filters and termination modes on the sample") {
    const auto& db = sample_db();
    const auto literal = nari::mine(db, sample_thr(), MinerConfig{CandidateFilter::literal, Termination::temp_empty});
    const auto freq = nari::mine(db, sample_thr(), MinerConfig{CandidateFilter::freq, Termination::temp_empty});
    const auto stop = nari::mine(db, sample_thr(), MinerConfig{CandidateFilter::literal, Termination::both_families_empty});
    CHECK(literal.ps == freq.ps);
    CHECK(literal.ns == freq.ns);
    CHECK(literal.ps == stop.ps);
    CHECK(literal.ns == stop.ns);
    CHECK(stop.levels.size() == 4);
}

TEST_CASE("both-families termination stops after an empty level") {
    // A and B always together: level 2 keeps nothing, so level 3 is never run.
    auto db = nari::load_basket("A B C\nA B\nA B C\nA B\n");
    const Thresholds t{R(1, 10), R(0), R(1, 10)};
    const auto stop = nari::mine(db, t, MinerConfig{CandidateFilter::literal, Termination::both_families_empty});
    const auto full = nari::mine(db, t, MinerConfig{CandidateFilter::literal, Termination::temp_empty});
    CHECK(stop.levels.size() == 1);
    CHECK(full.levels.size() == 2);
}

TEST_CASE("perfectly correlated pair has nothing of interest") {
    auto db = nari::load_basket("A B\nA B\nA B\n");
    const auto res = nari::mine(db, sample_thr());
    CHECK(res.ps.empty());
    CHECK(res.ns.empty());
}

TEST_CASE("mine validates inputs") {
    CHECK_THROWS_AS(nari::mine(sample_db(), Thresholds{R(2), R(0), R(0)}), nari::InvalidThreshold);
    const nari::TransactionDB empty({"A"}, {});
    CHECK_THROWS_AS(nari::mine(empty, sample_thr()), nari::DomainError);
}

TEST_CASE("level invariants on random databases") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 150; ++round) {
        nari::synth::BasketParams params;
        params.num_items = 2 + static_cast<std::size_t>(rng() % 7);
        params.num_transactions = 1 + static_cast<std::size_t>(rng() % 30);
        params.density = 0.25 + 0.1 * static_cast<double>(rng() % 5);
        params.num_patterns = rng() % 3;
        const auto db = nari::synth::random_db(rng, params);
        const Thresholds t{R(1 + static_cast<std::int64_t>(rng() % 5), 10), R(0),
                           R(1 + static_cast<std::int64_t>(rng() % 15), 100)};
        const MinerConfig cfg{rng() % 2 ? CandidateFilter::literal : CandidateFilter::freq, Termination::temp_empty};
        const auto res = nari::mine(db, t, cfg);

        std::vector<nari::Itemset> all_freq = res.freq1;
        for (const auto& l : res.levels) {
            CHECK(std::includes(l.temp.begin(), l.temp.end(), l.candidates.begin(), l.candidates.end()));
            CHECK(std::includes(l.candidates.begin(), l.candidates.end(), l.freq.begin(), l.freq.end()));
            CHECK(std::includes(l.freq.begin(), l.freq.end(), l.positive_pruned.begin(), l.positive_pruned.end()));
            CHECK(std::includes(l.nn.begin(), l.nn.end(), l.negative_interesting.begin(), l.negative_interesting.end()));
            CHECK(l.nn.size() + l.freq.size() == l.temp.size());
            for (const auto& s : l.temp) CHECK(s.size() == l.k);
            for (std::size_t i = 0; i < l.temp.size(); ++i) CHECK(l.counts[i] == db.support_count_scan(l.temp[i]));
            // Downward closure of Freq_k.
            for (const auto& s : l.freq)
                for (std::size_t p = 0; p < s.size(); ++p) CHECK(db.support(s.without_position(p)) >= t.minsprt);
            all_freq.insert(all_freq.end(), l.freq.begin(), l.freq.end());
        }
        nari::canonicalize(all_freq);

        for (const auto& s : res.ps) CHECK(nari::family_contains(all_freq, s));
        for (const auto& s : res.ns) {
            CHECK_FALSE(nari::family_contains(all_freq, s));
            CHECK_FALSE(nari::negative_partitions(db, s, t).empty());
            CHECK(s.size() >= 2);
        }
        std::vector<nari::Itemset> overlap;
        std::set_intersection(res.ps.begin(), res.ps.end(), res.ns.begin(), res.ns.end(), std::back_inserter(overlap));
        CHECK(overlap.empty());
    }
}

TEST_CASE("mine is deterministic and independent of thread count") {
    std::mt19937_64 rng(5);
    nari::synth::BasketParams params;
    params.num_items = 14;
    params.num_transactions = 300;
    params.density = 0.3;
    params.num_patterns = 4;
    const auto db = nari::synth::random_db(rng, params);
    const Thresholds t{R(1, 10), R(0), R(1, 100)};

    const int default_threads = nari::kernels::max_threads();
    nari::kernels::set_num_threads(1);
    const auto one = nari::mine(db, t);
    nari::kernels::set_num_threads(4);
    const auto four = nari::mine(db, t);
    const auto again = nari::mine(db, t);
    nari::kernels::set_num_threads(default_threads);

    CHECK(same_levels(one, four));
    CHECK(same_levels(four, again));
    CHECK_FALSE(one.ps.empty());
}
