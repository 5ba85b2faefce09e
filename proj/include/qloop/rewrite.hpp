#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "qloop/ncpoly.hpp"

namespace qloop {

// Reduction ran out of steps before reaching an ordered form. Reported,
// never swallowed: a suite treats it as "inconclusive", not "pass".
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// A rewriting system for one algebra: a rule oracle returning, for an
// adjacent generator pair, the element equal to g1*g2 (with every word on the
// right eventually smaller), or nullopt when the pair needs no rewriting.
class RewriteSystem {
  public:
    using Rule = std::function<std::optional<NCPoly>(const GenSym&, const GenSym&)>;

    RewriteSystem() = default;
    RewriteSystem(DescPtr desc, Rule rule, long default_budget = 4000000)
        : desc_(std::move(desc)), rule_(std::move(rule)), budget_(default_budget) {}

    const DescPtr& desc() const { return desc_; }
    long default_budget() const { return budget_; }

    // Memoized oracle access.
    const std::optional<NCPoly>& rule(const GenSym& a, const GenSym& b) const;

  private:
    DescPtr desc_;
    Rule rule_;
    long budget_ = 4000000;
    mutable std::map<std::pair<GenSym, GenSym>, std::optional<NCPoly>> cache_;
};

// Deterministic leftmost-outermost reduction to the ordered form.
NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs, long budget = -1);

// normal_form(a*b) convenience.
inline NCPoly nf_mul(const NCPoly& a, const NCPoly& b, const RewriteSystem& rs,
                     long budget = -1) {
    return normal_form(a * b, rs, budget);
}

}  // namespace qloop
