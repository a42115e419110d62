// Command-line front end: mines positive and negative itemsets of interest
// from a basket file and optionally derives rules.
//
// Exit codes: 0 success, 1 bad flags, 2 ingestion error, 3 oracle capacity.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nari/kernels.hpp"
#include "nari/report.hpp"

namespace {

constexpr int kExitBadFlags = 1;
constexpr int kExitIngestion = 2;
constexpr int kExitCapacity = 3;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level-wise search for positive and negative itemsets of interest"};

    std::string input;
    std::string minsprt;
    std::string minconf;
    std::string mininterest;
    std::string mode = "literal";
    std::string termination = "temp-empty";
    std::string format = "text";
    std::string reference;
    bool rules = false;
    bool compare_oracle = false;
    bool trace = false;
    int threads = 0;

    app.add_option("--input", input, "Basket file, one transaction per line")->required();
    app.add_option("--minsprt", minsprt, "Minimum support (decimal or fraction, e.g. 0.3 or 3/10)")->required();
    app.add_option("--minconf", minconf, "Minimum confidence for the rule stage")->required();
    app.add_option("--mininterest", mininterest, "Minimum |leverage|")->required();
    app.add_option("--mode", mode, "Candidate filter: literal or freq")
        ->check(CLI::IsMember({"literal", "freq"}));
    app.add_option("--termination", termination, "Loop end: temp-empty or paper-literal")
        ->check(CLI::IsMember({"temp-empty", "paper-literal"}));
    app.add_option("--format", format, "Report format: text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--rules", rules, "Derive positive and negative rules");
    app.add_flag("--compare-oracle", compare_oracle, "Cross-check against brute-force enumeration (small inputs)");
    app.add_option("--reference", reference, "PS/NS listing to diff against the oracle (needs --compare-oracle)");
    app.add_flag("--trace", trace, "Include every per-level family");
    app.add_option("--threads", threads, "OpenMP threads (0 keeps the runtime default)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadFlags;
    }

    nari::RunOptions options;
    options.input = input;
    options.rules = rules;
    options.compare_oracle = compare_oracle;
    options.trace = trace;
    options.config.candidate_filter =
        mode == "freq" ? nari::CandidateFilter::freq : nari::CandidateFilter::literal;
    options.config.termination =
        termination == "paper-literal" ? nari::Termination::both_families_empty : nari::Termination::temp_empty;

    try {
        options.thresholds.minsprt = nari::parse_rational(minsprt);
        options.thresholds.minconf = nari::parse_rational(minconf);
        options.thresholds.mininterest = nari::parse_rational(mininterest);
        options.thresholds.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadFlags;
    }
    if (!reference.empty() && !compare_oracle) {
        std::cerr << "error: --reference requires --compare-oracle\n";
        return kExitBadFlags;
    }

    nari::kernels::set_num_threads(threads);

    try {
        const nari::TransactionDB db = nari::load_basket_file(input);
        if (!reference.empty()) options.reference = nari::load_reference_file(reference, db);

        const nari::RunOutput run = nari::execute(db, options);
        if (format == "json")
            std::cout << nari::to_json(db, options, run).dump(2) << '\n';
        else
            std::cout << nari::to_text(db, options, run);
        if (rules && options.thresholds.minconf == nari::Rational(0))
            std::cerr << "note: --rules with minconf 0 keeps every rule regardless of confidence\n";
    } catch (const nari::IngestionError& e) {
        std::cerr << "ingestion error: " << e.what() << '\n';
        return kExitIngestion;
    } catch (const nari::OracleCapacityError& e) {
        std::cerr << "oracle error: " << e.what() << '\n';
        return kExitCapacity;
    }
    return 0;
}
