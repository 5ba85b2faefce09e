#pragma once

#include "qloop/rewrite.hpp"
#include "qloop/series.hpp"

namespace qloop {

// An algebra bundled with its rewriting system. Registries:
//   rational RTT / U(gl_n): {hbar, framing...}
//   finite/affine RTT / quantum gl_n: {v, framing...}
struct Algebra {
    DescPtr desc;
    RewriteSystem rs;

    NCPoly gen(const GenSym& g) const { return NCPoly::gen(desc, g); }
    NCPoly one() const { return NCPoly::one(desc); }
    NCPoly zero() const { return NCPoly::zero(desc); }
    NCPoly nf(const NCPoly& p, long budget = -1) const { return normal_form(p, rs, budget); }
    Poly deform() const { return Poly::var(desc->reg, desc->deformation); }
    RatFun scalar(const Rat& c) const { return RatFun::constant(desc->reg, c); }
};

// nframing > 0 adjoins framing variables z_1..z_{nframing} to the coefficients.
Algebra make_rtt_rational(int n, int nframing = 0);
Algebra make_env_gl(int n, int nframing = 0);
Algebra make_qenv_gl(int n, int nframing = 0, bool enhanced = false);
Algebra make_rtt_finite(int n, int nframing = 0, bool enhanced = false);
Algebra make_rtt_affine(int n, int nframing = 0, bool enhanced = false);

// --- Generating series ---------------------------------------------------

using NCSeries = Series<NCPoly>;

// t_{ij}(z) = delta_ij + hbar sum_{r>=1} t^{(r)}_{ij} z^{-r}, truncated at L.
NCSeries t_series_rational(const Algebra& A, int i, int j, int L);
// t^s_{ij}(z) = sum t^s_{ij}[r] z^{-r} (sector +: direction z^{-1}, r in [0,L];
// sector -: direction z, modes r in [-L,0]).
NCSeries t_series_trig(const Algebra& A, int sector, int i, int j, int L);

// --- RTT relation extraction (independent of the rewrite rules) -----------

// Coefficient of z^p w^q in  R T1(z) T2(w) - T2(w) T1(z) R  at matrix entry
// (row (a,c), column (b,d)); sectors select T^{e1}, T^{e2} for the trig kinds
// and are ignored for the rational kind.
NCPoly rtt_relation(const Algebra& A, int e1, int e2, int a, int c, int b, int d, int p,
                    int q);

// Dual-path check: the extracted relations agree verbatim with the closed
// commutator rule of the rational RTT algebra, for all index tuples with
// r,s <= maxlevel. Returns an empty string on success, else a description.
std::string check_rational_rtt_paths(int n, int maxlevel);

// All extracted relations reduce to zero in normal form (any kind).
std::string check_relations_reduce(const Algebra& A, int L, long budget = -1);

// --- Quantum minors and determinants --------------------------------------

// Quantum minor series of the fused antisymmetrized product, rational case:
// rows a_1..a_r, columns b_1..b_r, truncated at order L.
NCSeries quantum_minor_rational(const Algebra& A, const std::vector<int>& rows,
                                const std::vector<int>& cols, int L);
// qdet T(z) = minor(1..n;1..n).
NCSeries qdet_rational(const Algebra& A, int L);

// Trig quantum minors of T^{sector}(z).
NCSeries quantum_minor_trig(const Algebra& A, int sector, const std::vector<int>& rows,
                            const std::vector<int>& cols, int L);
NCSeries qdet_trig(const Algebra& A, int sector, int L);

// Centrality of qdet coefficients against all generators of level <= L.
std::string check_center_rational(const Algebra& A, int L);
// Also verifies d^+_0 d^-_0 = 1.
std::string check_center_trig(const Algebra& A, int L, long budget = -1);

// --- Hopf structure (rational RTT) ----------------------------------------

// Tensor power element: words per leg.
class TensorNC {
  public:
    TensorNC(DescPtr desc, int legs) : desc_(std::move(desc)), legs_(legs) {}
    using Key = std::vector<Word>;
    const std::map<Key, RatFun>& terms() const { return terms_; }
    int legs() const { return legs_; }
    const DescPtr& desc() const { return desc_; }
    void add(const Key& k, const RatFun& c);
    bool is_zero() const { return terms_.empty(); }
    friend TensorNC operator+(TensorNC a, const TensorNC& b) {
        for (const auto& [k, c] : b.terms_) a.add(k, c);
        return a;
    }
    friend TensorNC operator*(const TensorNC& a, const TensorNC& b);
    std::string str() const;

  private:
    DescPtr desc_;
    int legs_;
    std::map<Key, RatFun> terms_;
};

// Delta(t^{(r)}_{ij}) expanded into two legs.
TensorNC coproduct_rational(const Algebra& A, int i, int j, int r);
// m-fold iterated coproduct of a single generator.
TensorNC iterated_coproduct_rational(const Algebra& A, int i, int j, int r, int legs);
// delta_m(hbar t^{(r)}_{ij}) with each leg in normal form; returns true iff
// every coefficient is divisible by hbar^m.
bool gavarini_delta_check(const Algebra& A, int i, int j, int r, int m);

// --- Evaluation homomorphisms ---------------------------------------------

// Rational: t^{(r)}_{ij} -> delta_{r,1} E_{ij}, image in U(gl_n) normal form.
NCPoly ev_rtt_rational(const Algebra& Y, const Algebra& U, const NCPoly& x);
// Trig: t^+_{ij}[r] -> delta_{r0} t^+_{ij} - a delta_{r1} t^-_{ij} and
//       t^-_{ij}[-r] -> delta_{r0} t^-_{ij} - a^{-1} delta_{r1} t^+_{ij}; a = 1 here
// (other unit a handled by the spectral rescaling automorphism upstream).
NCPoly ev_rtt_trig(const Algebra& Aff, const Algebra& Fin, const NCPoly& x);

// --- Kernel identity suites ------------------------------------------------

std::string kernel_identity_suite_rational(int n, int maxr);
std::string kernel_identity_suite_trig(int n, int maxr, long budget = -1);

}  // namespace qloop
