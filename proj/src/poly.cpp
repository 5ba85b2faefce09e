#include "qloop/poly.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace qloop {

Poly Poly::constant(RegistryPtr reg, const Rat& c) {
    Poly p(std::move(reg));
    if (c != 0) p.terms_.emplace(Mono(static_cast<size_t>(p.reg_->size()), 0), c);
    return p;
}

Poly Poly::var(RegistryPtr reg, int id, int exp) {
    Poly p(std::move(reg));
    Mono m(static_cast<size_t>(p.reg_->size()), 0);
    m.at(static_cast<size_t>(id)) = exp;
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

Poly Poly::monomial(RegistryPtr reg, Mono m, const Rat& c) {
    Poly p(std::move(reg));
    if (m.size() != static_cast<size_t>(p.reg_->size()))
        throw std::invalid_argument("Poly::monomial: exponent vector length mismatch");
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Mono& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int32_t e) { return e == 0; });
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("Poly::constant_value: not a constant");
    return terms_.begin()->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(reg_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!same_registry(reg_, o.reg_)) {
        if (!reg_) { *this = o; return *this; }
        throw std::invalid_argument("Poly: registry mismatch");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!same_registry(reg_, o.reg_)) {
        if (!reg_) { *this = -o; return *this; }
        throw std::invalid_argument("Poly: registry mismatch");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!same_registry(a.reg_, b.reg_))
        throw std::invalid_argument("Poly: registry mismatch");
    Poly r(a.reg_);
    Mono m(static_cast<size_t>(a.reg_ ? a.reg_->size() : 0), 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly& Poly::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Poly operator*(const Poly& p, const Rat& c) {
    Poly r = p;
    r.scale(c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = Poly::constant(reg_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool poly_less(const Poly& a, const Poly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    MonoGradedLex less;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return true;
        if (less(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

Poly Poly::mul_monomial(const Mono& m, const Rat& c) const {
    Poly r(reg_);
    if (c == 0) return r;
    Mono mm(m.size());
    for (const auto& [ma, ca] : terms_) {
        for (size_t k = 0; k < mm.size(); ++k) mm[k] = ma[k] + m[k];
        r.terms_.emplace(mm, ca * c);
    }
    return r;
}

std::optional<Poly> Poly::try_divide(const Poly& divisor) const {
    if (!same_registry(reg_, divisor.reg_))
        throw std::invalid_argument("Poly: registry mismatch");
    if (divisor.is_zero()) throw std::invalid_argument("Poly: division by zero");
    if (is_zero()) return Poly(reg_);
    const size_t nv = static_cast<size_t>(reg_->size());

    // Shift both operands into the genuine polynomial ring (monomials are units).
    auto low_shift = [nv](const Poly& p) {
        Mono lo(nv, 0);
        bool first = true;
        for (const auto& [m, c] : p.terms_) {
            (void)c;
            for (size_t k = 0; k < nv; ++k)
                lo[k] = first ? m[k] : std::min(lo[k], m[k]);
            first = false;
        }
        return lo;
    };
    Mono lo_n = low_shift(*this), lo_d = low_shift(divisor);
    Mono neg_n(nv), neg_d(nv);
    for (size_t k = 0; k < nv; ++k) {
        neg_n[k] = -lo_n[k];
        neg_d[k] = -lo_d[k];
    }
    Poly rem = mul_monomial(neg_n, 1);
    Poly div = divisor.mul_monomial(neg_d, 1);

    // Long division by leading (graded-lex max) term of divisor.
    const auto& dlead = *div.terms_.rbegin();
    Poly quot(reg_);
    Mono qm(nv);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        bool ok = true;
        for (size_t k = 0; k < nv; ++k) {
            qm[k] = rlead.first[k] - dlead.first[k];
            if (qm[k] < 0) ok = false;
        }
        if (!ok) return std::nullopt;
        Rat qc = rlead.second / dlead.second;
        quot.add_term(qm, qc);
        rem -= div.mul_monomial(qm, qc);
    }
    // Undo the unit shifts: result * x^(lo_d - lo_n).
    Mono back(nv);
    for (size_t k = 0; k < nv; ++k) back[k] = lo_n[k] - lo_d[k];
    return quot.mul_monomial(back, 1);
}

Poly Poly::subst_shift(int id, const Rat& c, int shift_id) const {
    Poly r(reg_);
    const size_t uid = static_cast<size_t>(id);
    for (const auto& [m, coeff] : terms_) {
        int32_t e = m[uid];
        if (e == 0) {
            r.add_term(m, coeff);
            continue;
        }
        if (e < 0)
            throw std::domain_error(
                "Poly::subst_shift: negative power of shifted variable leaves the Laurent ring");
        // (x + c*h)^e expanded by binomials.
        Mono base = m;
        Rat binom(1);
        for (int k = 0; k <= e; ++k) {
            base[uid] = e - k;
            Mono t = base;
            t[static_cast<size_t>(shift_id)] += k;
            Rat ck = binom;
            for (int j = 0; j < k; ++j) ck *= c;
            r.add_term(t, coeff * ck);
            binom *= (e - k);
            binom /= (k + 1);
        }
    }
    return r;
}

Poly Poly::subst_monomial(const RegistryPtr& target,
                          const std::vector<MonoImage>& images) const {
    if (images.size() != static_cast<size_t>(reg_->size()))
        throw std::invalid_argument("Poly::subst_monomial: image count mismatch");
    Poly r(target);
    const size_t tn = static_cast<size_t>(target->size());
    for (const auto& [m, coeff] : terms_) {
        Mono t(tn, 0);
        Rat c = coeff;
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            const MonoImage& im = images[k];
            if (im.coeff == 0)
                throw std::domain_error("Poly::subst_monomial: zero image of a used variable");
            for (size_t q = 0; q < tn; ++q) t[q] += im.mono[q] * m[k];
            int e = m[k];
            Rat f = im.coeff;
            if (e < 0) {
                f = 1 / f;
                e = -e;
            }
            for (int j = 0; j < e; ++j) c *= f;
        }
        r.add_term(t, c);
    }
    return r;
}

Poly Poly::permute_vars(const std::vector<int>& perm) const {
    Poly r(reg_);
    Mono t(perm.size());
    for (const auto& [m, coeff] : terms_) {
        for (size_t k = 0; k < perm.size(); ++k) t[static_cast<size_t>(perm[k])] = m[k];
        r.add_term(t, coeff);
    }
    return r;
}

std::map<int, Poly> Poly::coefficients_in(int id) const {
    std::map<int, Poly> out;
    const size_t uid = static_cast<size_t>(id);
    for (const auto& [m, c] : terms_) {
        Mono t = m;
        int e = t[uid];
        t[uid] = 0;
        auto [it, fresh] = out.try_emplace(e, Poly(reg_));
        (void)fresh;
        it->second.add_term(t, c);
    }
    return out;
}

long Poly::degree_in(int id) const {
    long d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        long e = m[static_cast<size_t>(id)];
        d = first ? e : std::max(d, e);
        first = false;
    }
    return d;
}

long Poly::low_degree_in(int id) const {
    long d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        long e = m[static_cast<size_t>(id)];
        d = first ? e : std::min(d, e);
        first = false;
    }
    return d;
}

bool Poly::depends_on(int id) const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m[static_cast<size_t>(id)] != 0) return true;
    }
    return false;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded-lex: leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool printed_coeff = false;
        bool has_var = std::any_of(m.begin(), m.end(), [](int32_t e) { return e != 0; });
        if (ac != 1 || !has_var) {
            os << ac.get_str();
            printed_coeff = true;
        }
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (printed_coeff) os << "*";
            os << reg_->name(static_cast<int>(k));
            if (m[k] != 1) os << "^" << m[k];
            printed_coeff = true;
        }
    }
    return os.str();
}

Poly symmetrize_blocks(const Poly& f, const std::vector<std::vector<int>>& blocks) {
    // Iterate over the product of symmetric groups; average.
    Poly acc(f.registry());
    const int nv = f.registry()->size();
    std::vector<int> perm(static_cast<size_t>(nv));
    std::vector<std::vector<int>> arrangements;
    // Current arrangement per block.
    std::vector<std::vector<int>> cur;
    cur.reserve(blocks.size());
    for (const auto& b : blocks) {
        auto s = b;
        std::sort(s.begin(), s.end());
        cur.push_back(s);
    }
    long count = 0;
    // Recursive enumeration of block permutations.
    std::vector<std::vector<int>> sorted = cur;
    auto apply = [&]() {
        for (int k = 0; k < nv; ++k) perm[static_cast<size_t>(k)] = k;
        for (size_t b = 0; b < blocks.size(); ++b)
            for (size_t j = 0; j < sorted[b].size(); ++j)
                perm[static_cast<size_t>(sorted[b][j])] = cur[b][j];
        acc += f.permute_vars(perm);
        ++count;
    };
    // next_permutation over each block, odometer style
    std::function<void(size_t)> rec = [&](size_t b) {
        if (b == blocks.size()) {
            apply();
            return;
        }
        std::sort(cur[b].begin(), cur[b].end());
        do {
            rec(b + 1);
        } while (std::next_permutation(cur[b].begin(), cur[b].end()));
    };
    rec(0);
    acc.scale(Rat(1, count));
    return acc;
}

bool is_symmetric_in_blocks(const Poly& f, const std::vector<std::vector<int>>& blocks) {
    // Transpositions of adjacent elements generate each block's symmetric group.
    const int nv = f.registry()->size();
    for (const auto& b : blocks) {
        for (size_t j = 0; j + 1 < b.size(); ++j) {
            std::vector<int> perm(static_cast<size_t>(nv));
            for (int k = 0; k < nv; ++k) perm[static_cast<size_t>(k)] = k;
            perm[static_cast<size_t>(b[j])] = b[j + 1];
            perm[static_cast<size_t>(b[j + 1])] = b[j];
            if (f.permute_vars(perm) != f) return false;
        }
    }
    return true;
}

}  // namespace qloop
