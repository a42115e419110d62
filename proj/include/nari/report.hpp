#ifndef NARI_REPORT_HPP
#define NARI_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nari/miner.hpp"
#include "nari/oracle.hpp"
#include "nari/rules.hpp"
#include "nari/transactions.hpp"

namespace nari {

/// Expected PS/NS listings to diff the oracle against.
///
/// Text format, one itemset per line:
///     ps: B D
///     ns: A B C D
/// Blank lines and lines starting with '#' are ignored.
struct ReferenceLists {
    std::vector<Itemset> ps;
    std::vector<Itemset> ns;
};

/// Throws IngestionError on a malformed line or a token missing from `db`.
ReferenceLists parse_reference(std::string_view text, const TransactionDB& db);
ReferenceLists load_reference_file(const std::filesystem::path& path, const TransactionDB& db);

struct RunOptions {
    std::string input;
    Thresholds thresholds;
    MinerConfig config;
    bool rules = false;
    bool compare_oracle = false;
    bool trace = false;
    std::optional<ReferenceLists> reference;
};

struct RunOutput {
    MiningResult result;
    std::vector<Rule> rules;
    std::optional<OracleResult> oracle;
};

/// Mines, optionally derives rules and runs the oracle. Throws
/// OracleCapacityError when the oracle is requested on too many items.
RunOutput execute(const TransactionDB& db, const RunOptions& options);

std::string_view to_string(CandidateFilter mode);
/// CLI spelling: "temp-empty" / "paper-literal".
std::string_view to_string(Termination mode);

nlohmann::ordered_json to_json(const TransactionDB& db, const RunOptions& options, const RunOutput& run);
std::string to_text(const TransactionDB& db, const RunOptions& options, const RunOutput& run);

} // namespace nari

#endif
