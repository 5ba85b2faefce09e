#pragma once

#include "qloop/rtt.hpp"

namespace qloop {

// Gauss decomposition T = F G E of a generating matrix into lower-unitriangular,
// diagonal and upper-unitriangular series, solved by Schur complements.
// Mode conventions:
//   rational: e_{ij}(z) = hbar sum_{r>=1} e^{(r)}_{ij} z^{-r}, g_i = 1 + hbar sum g^{(r)}_i z^{-r}
//   trig +:   e^+_{ij}(z) = sum_{r>=0} e^{(r)}_{ij} z^{-r}, g^+_i(z) = sum_{r>=0} g^{(r)}_i z^{-r}
//   trig -:   modes at r <= 0 (with f-modes shifted per the half-current split).
struct GaussModes {
    int n = 0, L = 0;
    int sector = 0;  // 0 rational, +-1 trig
    std::map<std::tuple<int, int>, NCSeries> e, f;  // (i,j) entries, i<j resp. i>j
    std::map<int, NCSeries> g;

    // Mode accessors returning plain algebra elements. For the rational case
    // the leading hbar of the series is divided out, matching e^{(r)}_{ij}.
    NCPoly e_mode(int i, int j, int r) const;
    NCPoly f_mode(int i, int j, int r) const;
    NCPoly g_mode(int i, int r) const;
};

GaussModes gauss_rational(const Algebra& A, int L);
GaussModes gauss_trig(const Algebra& A, int sector, int L);

// F*G*E recombines to T, coefficientwise up to order L (after normal form).
std::string check_gauss_recombine(const Algebra& A, const GaussModes& gm);

}  // namespace qloop
