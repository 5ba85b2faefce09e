#include "qloop/ratfun.hpp"

#include <sstream>

namespace qloop {

std::optional<AtomRec> recognize_atom(const Poly& p, int deformation) {
    if (p.is_zero()) return std::nullopt;
    const auto& reg = p.registry();
    const size_t nv = static_cast<size_t>(reg->size());
    const size_t def = static_cast<size_t>(deformation);

    // Extract monomial content (min exponent per variable) and unit sign later.
    Mono lo(nv, 0);
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        for (size_t k = 0; k < nv; ++k) lo[k] = first ? m[k] : std::min(lo[k], m[k]);
        first = false;
    }
    Mono neg(nv);
    for (size_t k = 0; k < nv; ++k) neg[k] = -lo[k];
    Poly q = p.mul_monomial(neg, 1);

    // Collect terms of q.
    std::vector<std::pair<Mono, Rat>> ts(q.terms().begin(), q.terms().end());
    if (ts.size() > 3) return std::nullopt;

    auto nondef = [&](const Mono& m) {
        Mono r = m;
        r[def] = 0;
        return r;
    };
    auto is_trivial = [&](const Mono& m) {
        for (size_t k = 0; k < nv; ++k)
            if (k != def && m[k] != 0) return false;
        return true;
    };

    MonoGradedLex less;

    if (ts.size() == 1) return std::nullopt;  // pure unit, not an atom

    if (ts.size() == 2) {
        // Candidates: Var + constant? No: Var atom is a single variable (1 term
        // after content extraction it would be constant). Two-term shapes:
        // Unit: 1 - v^m; Q: M1 - v^m M2; Diff without hbar: X - c*Y.
        size_t a = 0, b = 1;
        Mono na = nondef(ts[a].first), nb = nondef(ts[b].first);
        if (na == nb) {
            // both share the non-deformation part (which is trivial after content
            // extraction); unit atom 1 - v^m.
            size_t leadi = ts[a].first[def] < ts[b].first[def] ? a : b;
            size_t oth = 1 - leadi;
            int m = ts[oth].first[def] - ts[leadi].first[def];
            if (m == 0) return std::nullopt;  // would be a constant
            if (ts[oth].second != -ts[leadi].second) return std::nullopt;
            Rat unit = ts[leadi].second;
            Poly atom = Poly::monomial(reg, ts[leadi].first, 1) -
                        Poly::monomial(reg, ts[oth].first, 1);
            // shift so lead has v^0; content extraction already ensured min = 0
            Mono um = lo;
            um[def] += ts[leadi].first[def];
            if (ts[leadi].first[def] != 0) {
                Mono sh(nv, 0);
                sh[def] = -ts[leadi].first[def];
                atom = atom.mul_monomial(sh, 1);
            }
            return AtomRec{AtomKind::Unit, atom, um, unit};
        }
        size_t leadi = less(na, nb) ? b : a;
        size_t oth = 1 - leadi;
        // Orient: leading term gets coefficient +1 and v-power 0.
        int vlead = ts[leadi].first[def];
        Rat unit = ts[leadi].second;
        Rat ratio = -ts[oth].second / ts[leadi].second;
        Mono um = lo;
        um[def] += vlead;
        Mono lm = ts[leadi].first;
        lm[def] = 0;
        Mono om = ts[oth].first;
        om[def] -= vlead;

        auto var_of = [&](const Mono& m) -> int {
            int id = -1;
            for (size_t k = 0; k < nv; ++k) {
                if (k == def) continue;
                if (m[k] == 1 && id < 0)
                    id = static_cast<int>(k);
                else if (m[k] != 0)
                    return -2;
            }
            return id;
        };
        int xv = var_of(lm), yv = var_of(om);
        bool plain_vars = xv >= 0 && (yv >= 0 || is_trivial(om));
        if (om[def] == 0 && plain_vars && ratio != 0) {
            // Diff atom X - q*Y (no hbar part); also covers X - c with yv trivial.
            Poly atom = Poly::monomial(reg, lm, 1) - Poly::monomial(reg, om, ratio);
            return AtomRec{AtomKind::Diff, atom, um, unit};
        }
        if (ratio == 1) {
            // Q atom M1 - v^m M2.
            Poly atom = Poly::monomial(reg, lm, 1) - Poly::monomial(reg, om, 1);
            return AtomRec{AtomKind::Q, atom, um, unit};
        }
        return std::nullopt;
    }

    // Three terms: X - q*Y - c*hbar with X,Y plain variables, hbar exponent 1.
    int hterm = -1;
    for (size_t k = 0; k < 3; ++k)
        if (is_trivial(ts[k].first) && ts[k].first[def] == 1) hterm = static_cast<int>(k);
    if (hterm < 0) return std::nullopt;
    size_t i1 = (hterm + 1) % 3, i2 = (hterm + 2) % 3;
    Mono n1 = ts[i1].first, n2 = ts[i2].first;
    if (n1[def] != 0 || n2[def] != 0) return std::nullopt;
    size_t leadi = less(n1, n2) ? i2 : i1;
    size_t oth = (leadi == i1) ? i2 : i1;
    auto single_var = [&](const Mono& m) {
        int cnt = 0;
        for (size_t k = 0; k < nv; ++k) {
            if (k == def) continue;
            if (m[k] == 1) ++cnt;
            else if (m[k] != 0) return false;
        }
        return cnt == 1;
    };
    if (!single_var(ts[leadi].first) || !single_var(ts[oth].first)) return std::nullopt;
    Rat unit = ts[leadi].second;
    Poly atom = Poly::monomial(reg, ts[leadi].first, 1) +
                Poly::monomial(reg, ts[oth].first, ts[oth].second / unit) +
                Poly::monomial(reg, ts[static_cast<size_t>(hterm)].first,
                               ts[static_cast<size_t>(hterm)].second / unit);
    return AtomRec{AtomKind::Diff, atom, lo, unit};
}

const Poly& RatFun::as_poly() const {
    if (!den_.empty()) throw std::logic_error("RatFun::as_poly: nontrivial denominator");
    return num_;
}

void RatFun::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = den_.begin(); it != den_.end();) {
            if (auto q = num_.try_divide(it->first)) {
                num_ = std::move(*q);
                if (--it->second == 0) it = den_.erase(it);
                progress = true;
                break;
            }
            ++it;
        }
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (!registry()) return *this = o;
    // Common denominator: max multiplicity per atom.
    Poly a = num_, b = o.num_;
    std::map<Poly, int, PolyLess> den;
    for (const auto& [p, k] : den_) den[p] = k;
    for (const auto& [p, k] : o.den_) {
        auto it = den.find(p);
        if (it == den.end() || it->second < k) den[p] = k;
    }
    for (const auto& [p, k] : den) {
        auto ita = den_.find(p);
        int ka = ita == den_.end() ? 0 : ita->second;
        for (int j = ka; j < k; ++j) a *= p;
        auto itb = o.den_.find(p);
        int kb = itb == o.den_.end() ? 0 : itb->second;
        for (int j = kb; j < k; ++j) b *= p;
    }
    num_ = a + b;
    den_ = std::move(den);
    cancel();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun operator*(const RatFun& a, const RatFun& b) {
    RatFun r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [p, k] : b.den_) r.den_[p] += k;
    r.cancel();
    return r;
}

bool ratfun_less(const RatFun& a, const RatFun& b) {
    if (a.den_.size() != b.den_.size()) return a.den_.size() < b.den_.size();
    auto ia = a.den_.begin(), ib = b.den_.begin();
    for (; ia != a.den_.end(); ++ia, ++ib) {
        if (poly_less(ia->first, ib->first)) return true;
        if (poly_less(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return poly_less(a.num_, b.num_);
}

RatFun& RatFun::mul_poly(const Poly& p) {
    num_ *= p;
    cancel();
    return *this;
}

RatFun& RatFun::scale(const Rat& c) {
    num_.scale(c);
    if (num_.is_zero()) den_.clear();
    return *this;
}

RatFun& RatFun::div_poly(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("RatFun::div_poly: division by zero");
    // Try exact division first: keeps things polynomial when possible.
    if (auto q = num_.try_divide(p)) {
        num_ = std::move(*q);
        return *this;
    }
    int def = -1;
    for (int k = 0; k < registry()->size(); ++k)
        if (registry()->kind(k) == VarKind::Deformation) def = k;
    if (p.term_count() == 1) {
        const auto& [m, c] = *p.terms().begin();
        Mono neg(m.size());
        for (size_t k = 0; k < m.size(); ++k) neg[k] = -m[k];
        num_ = num_.mul_monomial(neg, Rat(1) / c);
        return *this;
    }
    auto rec = recognize_atom(p, def);
    if (!rec)
        throw std::domain_error("RatFun::div_poly: denominator leaves the atomic class: " +
                                p.str());
    Mono neg(rec->unit_mono.size());
    for (size_t k = 0; k < neg.size(); ++k) neg[k] = -rec->unit_mono[k];
    num_ = num_.mul_monomial(neg, Rat(1) / rec->unit_coeff);
    den_[rec->atom] += 1;
    cancel();
    return *this;
}

RatFun RatFun::pow(int e) const {
    RatFun r = RatFun::one(registry());
    if (e >= 0) {
        for (int j = 0; j < e; ++j) r *= *this;
        return r;
    }
    if (!den_.empty())
        throw std::domain_error("RatFun::pow: negative power of a non-polynomial");
    for (int j = 0; j < -e; ++j) r.div_poly(num_);
    return r;
}

RatFun RatFun::subst_shift(int var, const Rat& c, int hbar) const {
    if (registry()->kind(var) != VarKind::Gklo)
        throw std::domain_error("RatFun::subst_shift: only GKLO variables may be shifted");
    RatFun r;
    r.num_ = num_.subst_shift(var, c, hbar);
    for (const auto& [p, k] : den_) {
        Poly sp = p.subst_shift(var, c, hbar);
        auto rec = recognize_atom(sp, hbar);
        if (!rec)
            throw std::domain_error("RatFun::subst_shift: substitution broke an atom: " +
                                    sp.str());
        for (int j = 0; j < k; ++j) {
            Mono neg(rec->unit_mono.size());
            for (size_t q = 0; q < neg.size(); ++q) neg[q] = -rec->unit_mono[q];
            r.num_ = r.num_.mul_monomial(neg, Rat(1) / rec->unit_coeff);
        }
        r.den_[rec->atom] += k;
    }
    r.cancel();
    return r;
}

RatFun RatFun::subst_vpow(int var, int m, int v) const {
    if (registry()->kind(var) != VarKind::Gklo)
        throw std::domain_error("RatFun::subst_vpow: only GKLO variables may be shifted");
    const size_t nv = static_cast<size_t>(registry()->size());
    std::vector<Poly::MonoImage> images;
    images.reserve(nv);
    for (size_t k = 0; k < nv; ++k) {
        Mono mm(nv, 0);
        mm[k] = 1;
        if (k == static_cast<size_t>(var)) mm[static_cast<size_t>(v)] += m;
        images.push_back({Rat(1), std::move(mm)});
    }
    return subst_monomial(registry(), images);
}

RatFun RatFun::subst_monomial(const RegistryPtr& target,
                              const std::vector<Poly::MonoImage>& images) const {
    int def = -1;
    for (int k = 0; k < target->size(); ++k)
        if (target->kind(k) == VarKind::Deformation) def = k;
    RatFun r;
    r.num_ = num_.subst_monomial(target, images);
    for (const auto& [p, k] : den_) {
        Poly sp = p.subst_monomial(target, images);
        auto rec = recognize_atom(sp, def);
        if (!rec)
            throw std::domain_error("RatFun::subst_monomial: substitution broke an atom: " +
                                    sp.str());
        for (int j = 0; j < k; ++j) {
            Mono neg(rec->unit_mono.size());
            for (size_t q = 0; q < neg.size(); ++q) neg[q] = -rec->unit_mono[q];
            r.num_ = r.num_.mul_monomial(neg, Rat(1) / rec->unit_coeff);
        }
        r.den_[rec->atom] += k;
    }
    r.cancel();
    return r;
}

std::string RatFun::str() const {
    std::ostringstream os;
    if (den_.empty()) return num_.str();
    bool parens = num_.term_count() > 1;
    if (parens) os << "(";
    os << num_.str();
    if (parens) os << ")";
    for (const auto& [p, k] : den_) {
        os << "/(" << p.str() << ")";
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace qloop
