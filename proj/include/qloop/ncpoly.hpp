#pragma once

#include <map>

#include "qloop/gensym.hpp"
#include "qloop/ratfun.hpp"

namespace qloop {

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Element of a free associative algebra over the commutative coefficient
// ring: sparse sum of words in generator symbols with RatFun coefficients.
class NCPoly {
  public:
    using TermMap = std::map<Word, RatFun, WordLess>;

    NCPoly() = default;
    explicit NCPoly(DescPtr desc) : desc_(std::move(desc)) {}

    static NCPoly zero(DescPtr desc) { return NCPoly(std::move(desc)); }
    static NCPoly one(DescPtr desc);
    static NCPoly scalar(DescPtr desc, RatFun c);
    static NCPoly gen(DescPtr desc, const GenSym& g);
    static NCPoly word(DescPtr desc, Word w, RatFun c);

    const DescPtr& desc() const { return desc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    RatFun scalar_part() const;
    size_t term_count() const { return terms_.size(); }

    void add_term(const Word& w, const RatFun& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    NCPoly& scale(const Rat& c);
    NCPoly& scale_coeff(const RatFun& c);
    NCPoly& mul_poly(const Poly& p);
    NCPoly& div_poly(const Poly& p);  // coefficientwise, atomic denominators only

    // Exact division of every coefficient by the deformation variable;
    // throws if some coefficient is not divisible.
    NCPoly div_deformation(int count = 1) const;

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    std::string str() const;

  private:
    DescPtr desc_;
    TermMap terms_;
};

inline NCPoly operator*(const NCPoly& p, const RatFun& c) {
    NCPoly r = p;
    r.scale_coeff(c);
    return r;
}
inline NCPoly operator*(const RatFun& c, const NCPoly& p) { return p * c; }

// ab - x * ba
NCPoly q_commutator(const NCPoly& a, const NCPoly& b, const RatFun& x);
inline NCPoly commutator(const NCPoly& a, const NCPoly& b) {
    return a * b - b * a;
}

}  // namespace qloop
