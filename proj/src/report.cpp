#include "nari/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace nari {

namespace {

using json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<Itemset> only_in(std::span<const Itemset> a, std::span<const Itemset> b) {
    std::vector<Itemset> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

const OracleWitness* find_witness(std::span<const OracleWitness> family, const Itemset& s) {
    auto it = std::lower_bound(family.begin(), family.end(), s,
                               [](const OracleWitness& w, const Itemset& key) { return w.itemset < key; });
    return (it != family.end() && it->itemset == s) ? &*it : nullptr;
}

struct SetDiff {
    std::vector<Itemset> left_only;
    std::vector<Itemset> right_only;
};

struct Comparison {
    SetDiff miner_ps; // left = miner, right = oracle
    SetDiff miner_ns;
    std::optional<SetDiff> reference_ps; // left = reference, right = oracle
    std::optional<SetDiff> reference_ns;
};

Comparison compare(const RunOptions& options, const RunOutput& run) {
    const auto oracle_ps = run.oracle->ps_itemsets();
    const auto oracle_ns = run.oracle->ns_itemsets();
    Comparison c;
    c.miner_ps = {only_in(run.result.ps, oracle_ps), only_in(oracle_ps, run.result.ps)};
    c.miner_ns = {only_in(run.result.ns, oracle_ns), only_in(oracle_ns, run.result.ns)};
    if (options.reference) {
        c.reference_ps = SetDiff{only_in(options.reference->ps, oracle_ps), only_in(oracle_ps, options.reference->ps)};
        c.reference_ns = SetDiff{only_in(options.reference->ns, oracle_ns), only_in(oracle_ns, options.reference->ns)};
    }
    return c;
}

json rational_json(const Rational& r) {
    return json{{"fraction", to_fraction_string(r)}, {"decimal", to_decimal_string(r)}};
}

std::string rational_text(const Rational& r) {
    return to_fraction_string(r) + " (" + to_decimal_string(r) + ")";
}

json itemset_json(const TransactionDB& db, const Itemset& s) { return db.item_names(s); }

json family_json(const TransactionDB& db, std::span<const Itemset> family) {
    json out = json::array();
    for (const auto& s : family) out.push_back(itemset_json(db, s));
    return out;
}

std::string braces(const TransactionDB& db, const Itemset& s) { return "{" + db.format(s) + "}"; }

std::string rule_text(const TransactionDB& db, const Rule& r) {
    const bool neg_a = r.form == RuleForm::NP || r.form == RuleForm::NN;
    const bool neg_b = r.form == RuleForm::PN || r.form == RuleForm::NN;
    return (neg_a ? "!" : "") + braces(db, r.antecedent) + " -> " + (neg_b ? "!" : "") + braces(db, r.consequent);
}

json details_json(const TransactionDB& db, std::span<const Itemset> family, std::span<const InterestReport> best) {
    json out = json::array();
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& r = best[i];
        out.push_back(json{{"itemset", itemset_json(db, family[i])},
                           {"support", rational_json(r.q_support)},
                           {"best_partition", json::array({itemset_json(db, r.partition.left),
                                                           itemset_json(db, r.partition.right)})},
                           {"leverage", rational_json(r.leverage)},
                           {"abs_leverage", rational_json(r.abs_leverage)}});
    }
    return out;
}

json witness_list_json(const TransactionDB& db, std::span<const Itemset> family,
                       std::span<const OracleWitness> witnesses) {
    json out = json::array();
    for (const auto& s : family) {
        json entry{{"itemset", itemset_json(db, s)}};
        if (const auto* w = find_witness(witnesses, s)) {
            entry["best_partition"] = json::array({itemset_json(db, w->left), itemset_json(db, w->right)});
            entry["abs_leverage"] = rational_json(w->abs_leverage);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::string witness_line(const TransactionDB& db, const Itemset& s, std::span<const OracleWitness> witnesses) {
    std::string line = braces(db, s);
    if (const auto* w = find_witness(witnesses, s))
        line += " via (" + braces(db, w->left) + " | " + braces(db, w->right) + ") |leverage| " +
                rational_text(w->abs_leverage);
    return line;
}

struct LevelSizes {
    std::size_t temp, candidates, frequent, positive, nn, negative;
};

LevelSizes sizes_of(const LevelState& l) {
    return {l.temp.size(), l.candidates.size(), l.freq.size(), l.positive_pruned.size(), l.nn.size(),
            l.negative_interesting.size()};
}

} // namespace

ReferenceLists parse_reference(std::string_view text, const TransactionDB& db) {
    ReferenceLists out;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        const std::string_view tag = colon == std::string_view::npos ? line : trim(line.substr(0, colon));
        if (colon == std::string_view::npos || (tag != "ps" && tag != "ns"))
            throw IngestionError("reference line " + std::to_string(line_no) + ": expected 'ps:' or 'ns:'", line_no);

        std::vector<ItemId> ids;
        std::istringstream tokens{std::string(line.substr(colon + 1))};
        for (std::string tok; tokens >> tok;) {
            tok.erase(std::remove(tok.begin(), tok.end(), ','), tok.end());
            if (tok.empty()) continue;
            auto id = db.find_item(tok);
            if (!id)
                throw IngestionError("reference line " + std::to_string(line_no) + ": unknown item '" + tok + "'",
                                     line_no);
            ids.push_back(*id);
        }
        if (ids.size() < 2)
            throw IngestionError("reference line " + std::to_string(line_no) + ": itemset needs at least 2 items",
                                 line_no);
        (tag == "ps" ? out.ps : out.ns).emplace_back(std::move(ids));
    }
    canonicalize(out.ps);
    canonicalize(out.ns);
    return out;
}

ReferenceLists load_reference_file(const std::filesystem::path& path, const TransactionDB& db) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestionError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_reference(buf.str(), db);
}

RunOutput execute(const TransactionDB& db, const RunOptions& options) {
    RunOutput run;
    // Checked first so an oversized request fails before any mining work.
    if (options.compare_oracle && db.num_items() > kOracleMaxItems)
        throw OracleCapacityError("--compare-oracle supports at most " + std::to_string(kOracleMaxItems) +
                                  " items, database has " + std::to_string(db.num_items()));

    run.result = mine(db, options.thresholds, options.config);
    if (options.rules) {
        run.rules = positive_rules(db, run.result.ps, options.thresholds);
        auto negative = negative_rules(db, run.result.ns, options.thresholds);
        run.rules.insert(run.rules.end(), negative.begin(), negative.end());
        canonicalize(run.rules);
    }
    if (options.compare_oracle) run.oracle = oracle_mine(db, options.thresholds);
    return run;
}

std::string_view to_string(CandidateFilter mode) {
    return mode == CandidateFilter::literal ? "literal" : "freq";
}

std::string_view to_string(Termination mode) {
    return mode == Termination::temp_empty ? "temp-empty" : "paper-literal";
}

json to_json(const TransactionDB& db, const RunOptions& options, const RunOutput& run) {
    const auto& res = run.result;
    const auto& thr = options.thresholds;

    json out;
    out["params"] = json{{"input", options.input},
                         {"num_transactions", db.num_transactions()},
                         {"num_items", db.num_items()},
                         {"minsprt", rational_json(thr.minsprt)},
                         {"minconf", rational_json(thr.minconf)},
                         {"mininterest", rational_json(thr.mininterest)},
                         {"mode", to_string(options.config.candidate_filter)},
                         {"termination", to_string(options.config.termination)},
                         {"rules", options.rules},
                         {"trace", options.trace},
                         {"compare_oracle", options.compare_oracle}};

    json singletons = json::array();
    for (ItemId id = 0; id < db.num_items(); ++id) {
        const Itemset s{id};
        singletons.push_back(json{{"item", db.item_name(id)},
                                  {"count", db.support_count(s)},
                                  {"support", rational_json(db.support(s))},
                                  {"frequent", family_contains(res.freq1, s)}});
    }
    out["singletons"] = std::move(singletons);

    json levels = json::array();
    for (const auto& l : res.levels) {
        const LevelSizes n = sizes_of(l);
        json level{{"k", l.k},
                   {"sizes", json{{"temp", n.temp},
                                  {"candidates", n.candidates},
                                  {"frequent", n.frequent},
                                  {"positive_interesting", n.positive},
                                  {"nn", n.nn},
                                  {"negative_interesting", n.negative}}}};
        if (options.trace) {
            level["temp"] = family_json(db, l.temp);
            level["candidates"] = family_json(db, l.candidates);
            level["frequent"] = family_json(db, l.freq);
            level["positive_interesting"] = family_json(db, l.positive_pruned);
            level["nn"] = family_json(db, l.nn);
            level["negative_interesting"] = family_json(db, l.negative_interesting);
        }
        levels.push_back(std::move(level));
    }
    out["levels"] = std::move(levels);

    out["ps"] = family_json(db, res.ps);
    out["ns"] = family_json(db, res.ns);

    json ps_details = json::array();
    json ns_details = json::array();
    for (const auto& l : res.levels) {
        for (auto& d : details_json(db, l.positive_pruned, l.positive_best)) ps_details.push_back(std::move(d));
        for (auto& d : details_json(db, l.negative_interesting, l.negative_best)) ns_details.push_back(std::move(d));
    }
    out["ps_details"] = std::move(ps_details);
    out["ns_details"] = std::move(ns_details);

    json rules = json::array();
    for (const auto& r : run.rules) {
        rules.push_back(json{{"form", to_string(r.form)},
                             {"antecedent", itemset_json(db, r.antecedent)},
                             {"consequent", itemset_json(db, r.consequent)},
                             {"text", rule_text(db, r)},
                             {"support", rational_json(r.rule_support)},
                             {"confidence", rational_json(r.confidence)},
                             {"interest", rational_json(r.signed_interest)}});
    }
    out["rules"] = std::move(rules);

    out["stats"] = json{{"frequent_count", res.stats.frequent_count},
                        {"positive_interesting_count", res.stats.positive_interesting_count},
                        {"negative_candidate_count", res.stats.negative_candidate_count},
                        {"negative_interesting_count", res.stats.negative_interesting_count},
                        {"rule_count", run.rules.size()}};

    if (run.oracle) {
        const Comparison c = compare(options, run);
        const auto& ops = run.oracle->ps;
        const auto& ons = run.oracle->ns;
        json cmp{{"oracle_ps", family_json(db, run.oracle->ps_itemsets())},
                 {"oracle_ns", family_json(db, run.oracle->ns_itemsets())},
                 {"miner", json{{"ps_miner_only", family_json(db, c.miner_ps.left_only)},
                                {"ps_oracle_only", witness_list_json(db, c.miner_ps.right_only, ops)},
                                {"ns_miner_only", family_json(db, c.miner_ns.left_only)},
                                {"ns_oracle_only", witness_list_json(db, c.miner_ns.right_only, ons)}}}};
        if (c.reference_ps) {
            cmp["reference"] = json{{"ps_reference_only", family_json(db, c.reference_ps->left_only)},
                                    {"ps_oracle_only", witness_list_json(db, c.reference_ps->right_only, ops)},
                                    {"ns_reference_only", family_json(db, c.reference_ns->left_only)},
                                    {"ns_oracle_only", witness_list_json(db, c.reference_ns->right_only, ons)}};
        }
        out["oracle_comparison"] = std::move(cmp);
    }
    return out;
}

std::string to_text(const TransactionDB& db, const RunOptions& options, const RunOutput& run) {
    const auto& res = run.result;
    const auto& thr = options.thresholds;
    std::ostringstream os;

    os << "parameters\n"
       << "  input         " << options.input << '\n'
       << "  transactions  " << db.num_transactions() << '\n'
       << "  items         " << db.num_items() << '\n'
       << "  minsprt       " << rational_text(thr.minsprt) << '\n'
       << "  minconf       " << rational_text(thr.minconf) << '\n'
       << "  mininterest   " << rational_text(thr.mininterest) << '\n'
       << "  mode          " << to_string(options.config.candidate_filter) << '\n'
       << "  termination   " << to_string(options.config.termination) << '\n';
    if (options.rules && thr.minconf == Rational(0))
        os << "  NOTE          minconf is 0: rules are not filtered by confidence\n";

    os << "\nsingletons\n";
    for (ItemId id = 0; id < db.num_items(); ++id) {
        const Itemset s{id};
        os << "  " << std::left << std::setw(8) << db.item_name(id) << std::right << " count " << std::setw(4)
           << db.support_count(s) << "  support " << rational_text(db.support(s))
           << (family_contains(res.freq1, s) ? "  frequent" : "") << '\n';
    }

    os << "\nlevels\n"
       << "      k   |Temp|      |C|   |Freq|      |P|     |NN|      |N|\n";
    for (const auto& l : res.levels) {
        const LevelSizes n = sizes_of(l);
        os << "  " << std::setw(5) << l.k << std::setw(9) << n.temp << std::setw(9) << n.candidates
           << std::setw(9) << n.frequent << std::setw(9) << n.positive << std::setw(9) << n.nn << std::setw(9)
           << n.negative << '\n';
    }

    if (options.trace) {
        auto family_line = [&](std::string_view name, std::span<const Itemset> family) {
            os << "    " << std::left << std::setw(22) << name << std::right;
            for (const auto& s : family) os << ' ' << braces(db, s);
            os << '\n';
        };
        os << "\ntrace\n";
        for (const auto& l : res.levels) {
            os << "  k=" << l.k << '\n';
            family_line("temp", l.temp);
            family_line("candidates", l.candidates);
            family_line("frequent", l.freq);
            family_line("positive_interesting", l.positive_pruned);
            family_line("nn", l.nn);
            family_line("negative_interesting", l.negative_interesting);
        }
    }

    auto listing = [&](std::string_view title, std::size_t total, auto family_of, auto best_of) {
        os << '\n' << title << " (" << total << ")\n";
        for (const auto& l : res.levels) {
            const auto& family = family_of(l);
            const auto& best = best_of(l);
            for (std::size_t i = 0; i < family.size(); ++i) {
                const auto& r = best[i];
                os << "  " << braces(db, family[i]) << "  support " << rational_text(r.q_support) << "  best ("
                   << braces(db, r.partition.left) << " | " << braces(db, r.partition.right) << ")  leverage "
                   << rational_text(r.leverage) << '\n';
            }
        }
    };
    listing("PS", res.ps.size(), [](const LevelState& l) -> const auto& { return l.positive_pruned; },
            [](const LevelState& l) -> const auto& { return l.positive_best; });
    listing("NS", res.ns.size(), [](const LevelState& l) -> const auto& { return l.negative_interesting; },
            [](const LevelState& l) -> const auto& { return l.negative_best; });

    if (options.rules) {
        os << "\nrules (" << run.rules.size() << ")\n";
        for (const auto& r : run.rules) {
            os << "  " << to_string(r.form) << "  " << rule_text(db, r) << "  support " << rational_text(r.rule_support)
               << "  confidence " << rational_text(r.confidence) << "  interest " << rational_text(r.signed_interest)
               << '\n';
        }
    }

    os << "\nstats\n"
       << "  frequent itemsets (size >= 2)   " << res.stats.frequent_count << '\n'
       << "  positive itemsets of interest   " << res.stats.positive_interesting_count << '\n'
       << "  negative candidates             " << res.stats.negative_candidate_count << '\n'
       << "  negative itemsets of interest   " << res.stats.negative_interesting_count << '\n';

    if (run.oracle) {
        const Comparison c = compare(options, run);
        const auto& ops = run.oracle->ps;
        const auto& ons = run.oracle->ns;
        auto block = [&](std::string_view label, std::span<const Itemset> family,
                         std::span<const OracleWitness> witnesses) {
            if (family.empty()) return;
            os << "    " << label << '\n';
            for (const auto& s : family) os << "      " << witness_line(db, s, witnesses) << '\n';
        };
        auto plain_block = [&](std::string_view label, std::span<const Itemset> family) {
            if (family.empty()) return;
            os << "    " << label << '\n';
            for (const auto& s : family) os << "      " << braces(db, s) << '\n';
        };

        os << "\noracle comparison\n"
           << "  oracle PS " << run.oracle->ps.size() << ", oracle NS " << run.oracle->ns.size() << '\n';
        const bool miner_same = c.miner_ps.left_only.empty() && c.miner_ps.right_only.empty() &&
                                c.miner_ns.left_only.empty() && c.miner_ns.right_only.empty();
        os << "  miner vs oracle: " << (miner_same ? "identical" : "differs") << '\n';
        plain_block("PS miner-only", c.miner_ps.left_only);
        block("PS oracle-only", c.miner_ps.right_only, ops);
        plain_block("NS miner-only", c.miner_ns.left_only);
        block("NS oracle-only", c.miner_ns.right_only, ons);

        if (c.reference_ps) {
            const bool ref_same = c.reference_ps->left_only.empty() && c.reference_ps->right_only.empty() &&
                                  c.reference_ns->left_only.empty() && c.reference_ns->right_only.empty();
            os << "  reference vs oracle: " << (ref_same ? "identical" : "differs") << '\n';
            plain_block("PS reference-only", c.reference_ps->left_only);
            block("PS oracle-only", c.reference_ps->right_only, ops);
            plain_block("NS reference-only", c.reference_ns->left_only);
            block("NS oracle-only", c.reference_ns->right_only, ons);
        }
    }
    return os.str();
}

} // namespace nari
