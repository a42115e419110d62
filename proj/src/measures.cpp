#include "nari/measures.hpp"

#include <string>

namespace nari {

namespace {

bool in_unit_interval(const Rational& r) { return r >= Rational(0) && r <= Rational(1); }

void require_pair_size(const Itemset& q) {
    if (q.size() < 2)
        throw DomainError("partitioning needs an itemset of at least 2 items, got " + std::to_string(q.size()));
    if (q.size() > 63) throw DomainError("itemset too large to enumerate partitions");
}

InterestReport make_report(Partition p, const Rational& sq, const Rational& sl, const Rational& sr) {
    const Rational lev = leverage(sq, sl, sr);
    return InterestReport{std::move(p), sq, sl, sr, lev, abs(lev)};
}

template <class Accept>
std::vector<InterestReport> scan_partitions(const SupportFn& support, const Itemset& q, Accept accept) {
    require_pair_size(q);
    const Rational sq = support(q);
    std::vector<InterestReport> out;
    for (auto& p : unordered_partitions(q)) {
        const Rational sl = support(p.left);
        const Rational sr = support(p.right);
        if (!accept(sl, sr)) continue;
        auto report = make_report(std::move(p), sq, sl, sr);
        out.push_back(std::move(report));
    }
    return out;
}

} // namespace

void Thresholds::validate() const {
    if (!in_unit_interval(minsprt)) throw InvalidThreshold("minsprt must lie in [0,1]");
    if (!in_unit_interval(minconf)) throw InvalidThreshold("minconf must lie in [0,1]");
    if (!in_unit_interval(mininterest)) throw InvalidThreshold("mininterest must lie in [0,1]");
}

Rational leverage(const Rational& sprt_q, const Rational& sprt_x, const Rational& sprt_y) {
    return sprt_q - sprt_x * sprt_y;
}

NegatedSupports negated_supports(const Rational& sprt_a, const Rational& sprt_b, const Rational& sprt_ab) {
    if (!in_unit_interval(sprt_a) || !in_unit_interval(sprt_b))
        throw InconsistentSupports("supports must lie in [0,1]");
    if (sprt_ab < Rational(0) || sprt_ab > sprt_a || sprt_ab > sprt_b)
        throw InconsistentSupports("sprt(A u B) must lie in [0, min(sprt(A), sprt(B))]");
    if (sprt_a + sprt_b - sprt_ab > Rational(1))
        throw InconsistentSupports("sprt(A) + sprt(B) - sprt(A u B) exceeds 1");

    return NegatedSupports{
        sprt_a - sprt_ab,
        sprt_b - sprt_ab,
        Rational(1) - sprt_a - sprt_b + sprt_ab,
        Rational(1) - sprt_a,
        Rational(1) - sprt_b,
    };
}

std::string_view to_string(RuleForm form) {
    switch (form) {
    case RuleForm::PP: return "PP";
    case RuleForm::PN: return "PN";
    case RuleForm::NP: return "NP";
    case RuleForm::NN: return "NN";
    }
    return "?";
}

RuleStats rule_stats(RuleForm form, const Rational& sprt_a, const Rational& sprt_b, const Rational& sprt_ab) {
    const NegatedSupports neg = negated_supports(sprt_a, sprt_b, sprt_ab);

    Rational antecedent;
    Rational consequent;
    Rational joint;
    switch (form) {
    case RuleForm::PP: antecedent = sprt_a;   consequent = sprt_b;   joint = sprt_ab;       break;
    case RuleForm::PN: antecedent = sprt_a;   consequent = neg.notb; joint = neg.a_notb;    break;
    case RuleForm::NP: antecedent = neg.nota; consequent = sprt_b;   joint = neg.nota_b;    break;
    case RuleForm::NN: antecedent = neg.nota; consequent = neg.notb; joint = neg.nota_notb; break;
    }
    if (antecedent == Rational(0))
        throw UndefinedConfidence(std::string("antecedent support is zero for form ") + std::string(to_string(form)));

    return RuleStats{joint, joint / antecedent, joint - antecedent * consequent};
}

std::vector<Partition> unordered_partitions(const Itemset& q) {
    require_pair_size(q);
    const std::uint64_t full = (std::uint64_t{1} << q.size()) - 1;
    std::vector<Partition> out;
    out.reserve((std::size_t{1} << (q.size() - 1)) - 1);
    // Bit 0 pinned to the left part: each unordered split appears once.
    for (std::uint64_t mask = 1; mask < full; mask += 2) {
        out.push_back(Partition{q.select(mask), q.select(full & ~mask)});
    }
    return out;
}

std::vector<InterestReport> interesting_positive_partitions(const SupportFn& support, const Itemset& q,
                                                            const Thresholds& thr) {
    auto all = scan_partitions(support, q, [](const Rational&, const Rational&) { return true; });
    std::erase_if(all, [&](const InterestReport& r) { return r.abs_leverage < thr.mininterest; });
    return all;
}

std::vector<InterestReport> interesting_positive_partitions(const TransactionDB& db, const Itemset& q,
                                                            const Thresholds& thr) {
    return interesting_positive_partitions([&db](const Itemset& s) { return db.support(s); }, q, thr);
}

std::vector<InterestReport> negative_partitions(const SupportFn& support, const Itemset& q,
                                                const Thresholds& thr) {
    auto frequent_parts = scan_partitions(support, q, [&](const Rational& sl, const Rational& sr) {
        return sl >= thr.minsprt && sr >= thr.minsprt;
    });
    std::erase_if(frequent_parts, [&](const InterestReport& r) { return r.abs_leverage < thr.mininterest; });
    return frequent_parts;
}

std::vector<InterestReport> negative_partitions(const TransactionDB& db, const Itemset& q,
                                                const Thresholds& thr) {
    return negative_partitions([&db](const Itemset& s) { return db.support(s); }, q, thr);
}

std::optional<InterestReport> best_report(std::span<const InterestReport> reports) {
    const InterestReport* best = nullptr;
    for (const auto& r : reports)
        if (best == nullptr || r.abs_leverage > best->abs_leverage) best = &r;
    if (best == nullptr) return std::nullopt;
    return *best;
}

} // namespace nari
