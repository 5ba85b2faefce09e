#include "qloop/rewrite.hpp"

namespace qloop {

const std::optional<NCPoly>& RewriteSystem::rule(const GenSym& a, const GenSym& b) const {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, rule_(a, b)).first->second;
}

NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs, long budget) {
    if (budget < 0) budget = rs.default_budget();
    NCPoly done(p.desc());
    // Worklist keyed by word so coefficients merge (and cancel) eagerly.
    std::map<Word, RatFun, WordLess> work(p.terms().begin(), p.terms().end());
    Word tmp;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Word& w = node.key();
        RatFun& coeff = node.mapped();
        if (coeff.is_zero()) continue;
        size_t pos = w.size();
        const NCPoly* rhs = nullptr;
        for (size_t k = 0; k + 1 < w.size(); ++k) {
            const auto& r = rs.rule(w[k], w[k + 1]);
            if (r) {
                pos = k;
                rhs = &*r;
                break;
            }
        }
        if (!rhs) {
            done.add_term(w, coeff);
            continue;
        }
        if (--budget < 0)
            throw BudgetExhausted("normal_form: step budget exhausted at word " + word_str(w));
        for (const auto& [rw, rc] : rhs->terms()) {
            tmp.clear();
            tmp.insert(tmp.end(), w.begin(), w.begin() + static_cast<long>(pos));
            tmp.insert(tmp.end(), rw.begin(), rw.end());
            tmp.insert(tmp.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
            RatFun c = coeff * rc;
            if (c.is_zero()) continue;
            auto it = work.find(tmp);
            if (it == work.end()) {
                work.emplace(tmp, std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return done;
}

}  // namespace qloop
