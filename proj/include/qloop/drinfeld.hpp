#pragma once

#include "qloop/gauss.hpp"

namespace qloop {

// Cartan matrix of sl_n.
inline int cartan_sln(int i, int j) { return i == j ? 2 : (i - j == 1 || j - i == 1) ? -1 : 0; }

// --- Drinfeld generators realized inside the rational RTT algebra ----------
//
// e_i(z) -> e_{i,i+1}(z + i hbar/2), f_i(z) -> f_{i+1,i}(z + i hbar/2),
// zeta_j(z) -> g_j(z + j hbar/2); an extra uniform spectral shift
// (extra * hbar) gives the twisted embedding used by the evaluation
// compatibility checks.
class YangianUpsilon {
  public:
    YangianUpsilon(const Algebra& A, int L, const Rat& extra = Rat(0));

    const Algebra& algebra() const { return *A_; }
    int order() const { return L_; }

    NCPoly e(int i, int r) const;     // image of e_i^{(r)}, 0 <= r < L
    NCPoly f(int i, int r) const;
    NCPoly zeta(int j, int r) const;
    NCPoly h(int i, int r) const;     // via h_i(z) = zeta_i(z)^{-1} zeta_{i+1}(z - hbar/2)
    const NCSeries& h_series(int i) const { return hs_.at(i); }

    // iterated commutators of e/f mode images
    NCPoly pbwd_E(int j, int i, int r) const;  // [ ... [e_j^{(r)}, e_{j+1}^{(0)}], ..., e_i^{(0)}]
    NCPoly pbwd_F(int j, int i, int r) const;  // [f_i^{(0)}, ..., [f_{j+1}^{(0)}, f_j^{(r)}] ...]

  private:
    const Algebra* A_;
    int L_;
    GaussModes gm_;
    std::map<std::tuple<int, int>, NCSeries> eshift_, fshift_;  // shifted entry series
    std::map<int, NCSeries> gshift_;
    std::map<int, NCSeries> hs_;
};

// Every defining relation of the Drinfeld Yangian, with modes below L,
// normal-forms to zero under the embedding. Empty string on success.
std::string check_yangian_relations_via_upsilon(int n, int L);

// Gauss e/f-mode recursions of the rational algebra, plus the explicit
// iterated-commutator formulas for the higher modes.
std::string check_gauss_recursions_rational(int n, int L);

// --- finite quantum gl_n <-> finite RTT -------------------------------------

class FiniteUpsilon {
  public:
    FiniteUpsilon(const Algebra& Q, const Algebra& F) : Q_(&Q), F_(&F) {}

    NCPoly to_rtt(const NCPoly& x) const;    // image of a quantum gl_n element
    NCPoly from_rtt(const NCPoly& x) const;  // inverse on generators (n <= 3)

    // root vectors of quantum gl_n
    NCPoly Ev(int j, int i1) const;  // E_{j,i1}, j < i1
    NCPoly Fv(int i1, int j) const;  // F_{i1,j}, j < i1

  private:
    const Algebra* Q_;
    const Algebra* F_;
};

// All defining relations of quantum gl_n map to zero in the finite RTT
// algebra under the isomorphism.
std::string check_qenv_relations_via_upsilon(int n);

// --- quantum loop gl_n <-> affine RTT ----------------------------------------

class LoopUpsilon {
  public:
    LoopUpsilon(const Algebra& Aff, int L);

    const Algebra& algebra() const { return *A_; }
    int order() const { return L_; }

    NCPoly e(int i, int r) const;  // |r| <= L
    NCPoly f(int i, int r) const;
    NCPoly phi(int sector, int j, int r) const;
    NCPoly psi(int sector, int i, int r) const;
    const NCSeries& psi_series(int sector, int i) const {
        return (sector > 0 ? psip_ : psim_).at(i);
    }

    // Gauss modes with the Ding-Frenkel spectral twist removed, i.e. the raw
    // RTT-side modes e~^{(r)}_{j,i+1}, f~^{(r)}_{i+1,j}.
    NCPoly etilde(int j, int i1, int r) const;
    NCPoly ftilde(int i1, int j, int r) const;

    // PBWD elements computed on images: E_{j,i+1}(r_) and F_{i+1,j}(r_).
    NCPoly pbwd_E(int j, int i, const std::vector<int>& rs) const;
    NCPoly pbwd_F(int j, int i, const std::vector<int>& rs) const;

  private:
    const Algebra* A_;
    int L_;
    GaussModes gp_, gm_;
    std::map<int, NCSeries> psip_, psim_;
};

// Trig Gauss-mode recursions and the mode-matching identities
// E^{(r)}_{j,i+1} = (-1)^{[r<0]} v^{-jr} e~^{(r)}_{j,i+1} (under the embedding),
// F^{(r)}_{i+1,j} = (-1)^{[r>0]} v^{-jr} f~^{(r)}_{i+1,j}.
std::string check_gauss_recursions_trig(int n, int L, long budget = -1);
std::string check_matching_modes_trig(int n, int rmax, long budget = -1);

// Defining relations of quantum loop gl_n, modes within |r| <= L, under the
// affine embedding (budgeted).
std::string check_loop_relations_via_upsilon(int n, int L, long budget = -1);

// --- shift homomorphisms iota -------------------------------------------------

// Image of a shifted-quantum-affine generator mode under
// iota_{mu,nu1,nu2}: e_i(z) -> (1-z^{-1})^{-alpha_i(nu1)} e_i(z), etc.
// nu1, nu2 are antidominant, given by their values alpha_i(nu).
NCPoly shift_iota(const DescPtr& shifted, const GenSym& g, const std::vector<int>& nu1,
                  const std::vector<int>& nu2, const std::vector<int>& mu_target);

// iota composition law on generators at truncation L (returns "" or failure).
std::string check_iota_composition(int n, const std::vector<int>& mu,
                                   const std::vector<int>& nu1, const std::vector<int>& nu2,
                                   const std::vector<int>& nu1p, const std::vector<int>& nu2p,
                                   int L);

}  // namespace qloop
