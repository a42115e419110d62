#ifndef NARI_RULES_HPP
#define NARI_RULES_HPP

#include <span>
#include <vector>

#include "nari/itemset.hpp"
#include "nari/measures.hpp"
#include "nari/transactions.hpp"

namespace nari {

/// An association rule between two disjoint itemsets. Whether each side is
/// negated is carried by `form`: for NP the antecedent is "not antecedent".
struct Rule {
    RuleForm form = RuleForm::PP;
    Itemset antecedent;
    Itemset consequent;
    Rational rule_support;
    Rational confidence;
    Rational signed_interest;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// Rules X -> Y over every ordered split of each member of `ps` that meets
/// minsprt, |leverage| >= mininterest and minconf.
std::vector<Rule> positive_rules(const TransactionDB& db, std::span<const Itemset> ps, const Thresholds& thr);

/// Rules A -> not B, not A -> B and not A -> not B over every ordered split
/// of each member of `ns` into two frequent parts. Interest is signed here.
std::vector<Rule> negative_rules(const TransactionDB& db, std::span<const Itemset> ns, const Thresholds& thr);

/// Sorted by form, antecedent, consequent; duplicates removed.
void canonicalize(std::vector<Rule>& rules);

} // namespace nari

#endif
