#include "nari/rules.hpp"

#include <algorithm>
#include <tuple>

namespace nari {

namespace {

/// Every ordered split (A, B) of q with both sides non-empty.
template <class Visit>
void for_each_ordered_split(const Itemset& q, Visit visit) {
    if (q.size() < 2) return;
    const std::uint64_t full = (std::uint64_t{1} << q.size()) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) visit(q.select(mask), q.select(full & ~mask));
}

} // namespace

std::vector<Rule> positive_rules(const TransactionDB& db, std::span<const Itemset> ps, const Thresholds& thr) {
    std::vector<Rule> out;
    for (const Itemset& q : ps) {
        const Rational sq = db.support(q);
        if (sq < thr.minsprt) continue;
        for_each_ordered_split(q, [&](Itemset x, Itemset y) {
            const Rational sx = db.support(x);
            if (sx == Rational(0)) return;
            const RuleStats st = rule_stats(RuleForm::PP, sx, db.support(y), sq);
            if (abs(st.signed_interest) < thr.mininterest || st.confidence < thr.minconf) return;
            out.push_back(Rule{RuleForm::PP, std::move(x), std::move(y), st.rule_support, st.confidence,
                               st.signed_interest});
        });
    }
    canonicalize(out);
    return out;
}

std::vector<Rule> negative_rules(const TransactionDB& db, std::span<const Itemset> ns, const Thresholds& thr) {
    std::vector<Rule> out;
    for (const Itemset& q : ns) {
        const Rational sq = db.support(q);
        for_each_ordered_split(q, [&](const Itemset& a, const Itemset& b) {
            const Rational sa = db.support(a);
            const Rational sb = db.support(b);
            if (sa < thr.minsprt || sb < thr.minsprt) return;
            for (RuleForm form : {RuleForm::PN, RuleForm::NP, RuleForm::NN}) {
                // Antecedent of support zero has no confidence.
                if (form == RuleForm::PN ? sa == Rational(0) : sa == Rational(1)) continue;
                const RuleStats st = rule_stats(form, sa, sb, sq);
                if (st.rule_support < thr.minsprt || st.signed_interest < thr.mininterest ||
                    st.confidence < thr.minconf)
                    continue;
                out.push_back(Rule{form, a, b, st.rule_support, st.confidence, st.signed_interest});
            }
        });
    }
    canonicalize(out);
    return out;
}

void canonicalize(std::vector<Rule>& rules) {
    auto key = [](const Rule& r) { return std::tie(r.form, r.antecedent, r.consequent); };
    std::sort(rules.begin(), rules.end(), [&](const Rule& a, const Rule& b) { return key(a) < key(b); });
    rules.erase(std::unique(rules.begin(), rules.end(),
                            [&](const Rule& a, const Rule& b) { return key(a) == key(b); }),
                rules.end());
}

} // namespace nari
