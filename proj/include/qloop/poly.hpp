#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qloop/registry.hpp"

namespace qloop {

using Rat = mpq_class;

// Exponent vector over a VarRegistry; entries may be negative (Laurent).
using Mono = std::vector<int32_t>;

// Graded lexicographic order: by total degree, then lex on exponents.
// This is the canonical term order for printing and leading-term division.
struct MonoGradedLex {
    bool operator()(const Mono& a, const Mono& b) const {
        long da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate Laurent polynomial with big-rational coefficients.
// Invariant: no zero coefficients stored; all monomials have registry length.
class Poly {
  public:
    using TermMap = std::map<Mono, Rat, MonoGradedLex>;

    Poly() = default;
    explicit Poly(RegistryPtr reg) : reg_(std::move(reg)) {}

    static Poly zero(RegistryPtr reg) { return Poly(std::move(reg)); }
    static Poly constant(RegistryPtr reg, const Rat& c);
    static Poly var(RegistryPtr reg, int id, int exp = 1);
    static Poly monomial(RegistryPtr reg, Mono m, const Rat& c);

    const RegistryPtr& registry() const { return reg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term if the polynomial is constant; throws otherwise.
    Rat constant_value() const;
    bool is_one() const { return is_constant() && !is_zero() && constant_value() == 1; }
    size_t term_count() const { return terms_.size(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& scale(const Rat& c);
    Poly pow(int e) const;  // e >= 0

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // Total order compatible with operator== (for use as map key).
    friend bool poly_less(const Poly& a, const Poly& b);

    void add_term(const Mono& m, const Rat& c);

    // Multiply by a single Laurent monomial (a unit of the ring).
    Poly mul_monomial(const Mono& m, const Rat& c) const;

    // Exact division: returns quotient iff divisor divides exactly.
    // Division works over the Laurent ring: monomial units are shifted out first.
    std::optional<Poly> try_divide(const Poly& divisor) const;

    // x_id -> x_id + c * x_shift (affine shift, used for w -> w + m*hbar).
    Poly subst_shift(int id, const Rat& c, int shift_id) const;

    // Monomial substitution across registries: every variable id of this
    // polynomial's registry maps to coefficient * monomial over target.
    struct MonoImage {
        Rat coeff;
        Mono mono;  // over target registry
    };
    Poly subst_monomial(const RegistryPtr& target, const std::vector<MonoImage>& images) const;

    // Variable renaming within the same registry (used by symmetrization).
    Poly permute_vars(const std::vector<int>& perm) const;

    // Collect coefficients of powers of one variable: exponent -> Poly without it.
    std::map<int, Poly> coefficients_in(int id) const;

    long degree_in(int id) const;     // max exponent, 0 for zero poly
    long low_degree_in(int id) const; // min exponent, 0 for zero poly

    bool depends_on(int id) const;

    std::string str() const;  // canonical text form, graded-lex descending

  private:
    RegistryPtr reg_;
    TermMap terms_;
};

Poly operator*(const Poly& p, const Rat& c);
inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// Average of f over the product of symmetric groups permuting variables
// within each block (blocks given as lists of variable ids).
Poly symmetrize_blocks(const Poly& f, const std::vector<std::vector<int>>& blocks);

// True iff f is invariant under all permutations within each block.
bool is_symmetric_in_blocks(const Poly& f, const std::vector<std::vector<int>>& blocks);

}  // namespace qloop
