#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qloop/poly.hpp"

namespace qloop {

// Denominators are never general polynomials: every denominator arising here
// is a product of atoms of the four shapes below. Anything else is an error.
enum class AtomKind {
    Diff,  // X - q*Y - c*hbar   (X, Y variables, q,c rational, Y/hbar parts optional)
    Q,     // M1 - v^m * M2      (M1, M2 monomials in non-deformation variables)
    Unit,  // 1 - v^m            (m > 0 after orientation)
    Var,   // X
};

struct AtomRec {
    AtomKind kind;
    Poly atom;       // canonical: oriented, leading coefficient +1, lead free of v-powers
    Mono unit_mono;  // input = unit_coeff * x^unit_mono * atom
    Rat unit_coeff;
};

// Splits a polynomial into (unit monomial) * (canonical atom), if it has one
// of the admissible shapes. `deformation` is the registry id of hbar/v.
std::optional<AtomRec> recognize_atom(const Poly& p, int deformation);

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

// Commutative rational function in factored form: expanded numerator times
// the inverse of a multiset of atomic denominator factors.
// Invariant: no denominator atom divides the numerator.
class RatFun {
  public:
    RatFun() = default;
    explicit RatFun(Poly num) : num_(std::move(num)) {}
    RatFun(Poly num, std::map<Poly, int, PolyLess> den)
        : num_(std::move(num)), den_(std::move(den)) {
        cancel();
    }

    static RatFun zero(const RegistryPtr& reg) { return RatFun(Poly::zero(reg)); }
    static RatFun one(const RegistryPtr& reg) { return RatFun(Poly::constant(reg, 1)); }
    static RatFun constant(const RegistryPtr& reg, const Rat& c) {
        return RatFun(Poly::constant(reg, c));
    }

    const Poly& num() const { return num_; }
    const std::map<Poly, int, PolyLess>& den() const { return den_; }
    const RegistryPtr& registry() const { return num_.registry(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    // The numerator, provided the denominator is empty; throws otherwise.
    const Poly& as_poly() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
    friend bool ratfun_less(const RatFun& a, const RatFun& b);

    RatFun& mul_poly(const Poly& p);
    RatFun& scale(const Rat& c);

    // Divide by a polynomial that must be a unit monomial times one atom.
    // Throws std::domain_error if the factor is not atomizable.
    RatFun& div_poly(const Poly& p);

    RatFun pow(int e) const;  // negative e inverts (numerator must be atomizable)

    // Exact substitution x -> x + c*hbar on a GKLO variable, denominator atoms
    // re-canonicalized. Also used with c rational (half-integer shifts).
    RatFun subst_shift(int var, const Rat& c, int hbar) const;

    // Exact substitution x -> v^m * x on a GKLO variable.
    RatFun subst_vpow(int var, int m, int v) const;

    // Generic monomial substitution (cross-registry); every denominator atom
    // must stay atomizable after substitution.
    RatFun subst_monomial(const RegistryPtr& target,
                          const std::vector<Poly::MonoImage>& images) const;

    std::string str() const;

  private:
    void cancel();
    Poly num_;
    std::map<Poly, int, PolyLess> den_;
};

inline RatFun operator*(const RatFun& f, const Rat& c) {
    RatFun r = f;
    r.scale(c);
    return r;
}
inline RatFun operator*(const Rat& c, const RatFun& f) { return f * c; }

}  // namespace qloop
