#ifndef NARI_MEASURES_HPP
#define NARI_MEASURES_HPP

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "nari/itemset.hpp"
#include "nari/rational.hpp"
#include "nari/transactions.hpp"

namespace nari {

class InvalidThreshold : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Support inputs that no database could produce (e.g. sprt(AB) > sprt(A)).
class InconsistentSupports : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Rule antecedent has support zero.
class UndefinedConfidence : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Thresholds {
    Rational minsprt;
    Rational minconf;
    Rational mininterest;

    /// Throws InvalidThreshold unless every value lies in [0,1].
    void validate() const;
};

/// Split of an itemset into two non-empty disjoint parts.
struct Partition {
    Itemset left;
    Itemset right;

    friend bool operator==(const Partition&, const Partition&) = default;
};

struct InterestReport {
    Partition partition;
    Rational q_support;
    Rational left_support;
    Rational right_support;
    Rational leverage;      // sprt(Q) - sprt(X) * sprt(Y)
    Rational abs_leverage;
};

/// sprt_q - sprt_x * sprt_y, signed.
Rational leverage(const Rational& sprt_q, const Rational& sprt_x, const Rational& sprt_y);

struct NegatedSupports {
    Rational a_notb;     // A present, B not fully present
    Rational nota_b;
    Rational nota_notb;
    Rational nota;
    Rational notb;
};

/// Complement supports from sprt(A), sprt(B), sprt(A u B) by inclusion-exclusion.
NegatedSupports negated_supports(const Rational& sprt_a, const Rational& sprt_b, const Rational& sprt_ab);

/// PP: A -> B, PN: A -> not B, NP: not A -> B, NN: not A -> not B.
enum class RuleForm { PP, PN, NP, NN };

std::string_view to_string(RuleForm form);

struct RuleStats {
    Rational rule_support;
    Rational confidence;
    Rational signed_interest;
};

RuleStats rule_stats(RuleForm form, const Rational& sprt_a, const Rational& sprt_b, const Rational& sprt_ab);

/// The 2^(n-1) - 1 unordered two-part splits of `q`. The part holding the
/// smallest id is always `left`; order follows the selection bitmask.
std::vector<Partition> unordered_partitions(const Itemset& q);

using SupportFn = std::function<Rational(const Itemset&)>;

/// Every unordered partition of `q` whose |leverage| reaches mininterest.
/// `q` is a positive itemset of interest iff the result is non-empty.
std::vector<InterestReport> interesting_positive_partitions(const SupportFn& support, const Itemset& q,
                                                            const Thresholds& thr);
std::vector<InterestReport> interesting_positive_partitions(const TransactionDB& db, const Itemset& q,
                                                            const Thresholds& thr);

/// As above, restricted to partitions whose parts are both frequent.
/// `q` is a negative itemset of interest iff the result is non-empty.
std::vector<InterestReport> negative_partitions(const SupportFn& support, const Itemset& q,
                                                const Thresholds& thr);
std::vector<InterestReport> negative_partitions(const TransactionDB& db, const Itemset& q,
                                                const Thresholds& thr);

/// Report with the largest |leverage|; first one wins ties.
std::optional<InterestReport> best_report(std::span<const InterestReport> reports);

} // namespace nari

#endif
