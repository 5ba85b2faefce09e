#include "qloop/ncpoly.hpp"

#include <sstream>

namespace qloop {

NCPoly NCPoly::one(DescPtr desc) {
    NCPoly p(desc);
    p.terms_.emplace(Word{}, RatFun::one(desc->reg));
    return p;
}

NCPoly NCPoly::scalar(DescPtr desc, RatFun c) {
    NCPoly p(desc);
    if (!c.is_zero()) p.terms_.emplace(Word{}, std::move(c));
    return p;
}

NCPoly NCPoly::gen(DescPtr desc, const GenSym& g) {
    if (!desc->legal(g))
        throw std::invalid_argument("NCPoly::gen: illegal generator " + gensym_str(g));
    NCPoly p(desc);
    p.terms_.emplace(Word{g}, RatFun::one(desc->reg));
    return p;
}

NCPoly NCPoly::word(DescPtr desc, Word w, RatFun c) {
    for (const auto& g : w)
        if (!desc->legal(g))
            throw std::invalid_argument("NCPoly::word: illegal generator " + gensym_str(g));
    NCPoly p(desc);
    if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

RatFun NCPoly::scalar_part() const {
    auto it = terms_.find(Word{});
    if (it == terms_.end()) return RatFun::zero(desc_->reg);
    return it->second;
}

void NCPoly::add_term(const Word& w, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r(desc_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (!desc_) return *this = o;
    if (desc_.get() != o.desc_.get() && !o.terms_.empty() && !terms_.empty() &&
        desc_->kind != o.desc_->kind)
        throw std::invalid_argument("NCPoly: descriptor mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    if (!desc_) return *this = -o;
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r(a.desc_ ? a.desc_ : b.desc_);
    Word w;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

NCPoly& NCPoly::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff.scale(c);
    return *this;
}

NCPoly& NCPoly::scale_coeff(const RatFun& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    NCPoly r(desc_);
    for (const auto& [w, coeff] : terms_) r.add_term(w, coeff * c);
    return *this = std::move(r);
}

NCPoly& NCPoly::mul_poly(const Poly& p) {
    NCPoly r(desc_);
    for (const auto& [w, coeff] : terms_) {
        RatFun c = coeff;
        c.mul_poly(p);
        r.add_term(w, c);
    }
    return *this = std::move(r);
}

NCPoly& NCPoly::div_poly(const Poly& p) {
    NCPoly r(desc_);
    for (const auto& [w, coeff] : terms_) {
        RatFun c = coeff;
        c.div_poly(p);
        r.add_term(w, c);
    }
    return *this = std::move(r);
}

NCPoly NCPoly::div_deformation(int count) const {
    Poly h = Poly::var(desc_->reg, desc_->deformation);
    Poly hk = h.pow(count);
    NCPoly r(desc_);
    for (const auto& [w, coeff] : terms_) {
        if (!coeff.is_polynomial())
            throw std::domain_error("NCPoly::div_deformation: coefficient not polynomial");
        auto q = coeff.num().try_divide(hk);
        if (!q)
            throw std::domain_error("NCPoly::div_deformation: coefficient not divisible: " +
                                    coeff.str());
        r.add_term(w, RatFun(std::move(*q)));
    }
    return r;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!w.empty()) os << "*" << word_str(w);
    }
    return os.str();
}

NCPoly q_commutator(const NCPoly& a, const NCPoly& b, const RatFun& x) {
    return a * b - x * (b * a);
}

}  // namespace qloop
