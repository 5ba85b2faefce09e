#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qloop/registry.hpp"

namespace qloop {

// Generator families across all algebras handled by the kernel.
enum class Fam : uint8_t {
    TRat,   // t^{(r)}_{ij} of the rational RTT Yangian, r >= 1
    TTrig,  // t^s_{ij}[r]: sector s=+1 has r >= 0, sector s=-1 has r <= 0
    Egl,    // E_{ij} of U(gl_n)
    QE,     // E_i of quantum gl_n
    QF,     // F_i of quantum gl_n
    QT,     // t_j^{+-1} of quantum gl_n (inv = exponent sign)
    Ye,     // e_i^{(r)} of the Drinfeld Yangian
    Yf,     // f_i^{(r)}
    Yzeta,  // zeta_j^{(r)}
    SYE,    // E_i^{(r)} of the Cartan-doubled / shifted Yangian
    SYF,    // F_i^{(r)}
    SYH,    // H_i^{(r)}
    Le,     // e_{i,r} of quantum loop gl_n, r in Z
    Lf,     // f_{i,r}
    Lphi,   // phi^s_{j,r}: sector +- with r >= 0 resp. r <= 0 (inv for (phi^+-_{j,0})^{-1})
    Lpsi,   // psi^s_{i,r} of shifted quantum affine algebras (inv for sanctioned inverses)
    PhiAd,  // phi^s_i of adjoint type, inv = exponent sign
    TRoot,  // central n-th root t^{+-1/n} of enhanced algebras (inv = exponent sign)
};

struct GenSym {
    Fam fam{};
    int8_t sector = 0;  // -1, 0, +1
    int8_t inv = 1;     // +1 or -1 (exponent sign for invertible generators)
    int16_t i = 0, j = 0;
    int32_t r = 0;

    friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

using Word = std::vector<GenSym>;

inline GenSym t_rat(int i, int j, int r) { return {Fam::TRat, 0, 1, (int16_t)i, (int16_t)j, r}; }
// sector +1: level r >= 0; sector -1: pass the signed mode (r <= 0).
inline GenSym t_trig(int sector, int i, int j, int r) {
    return {Fam::TTrig, (int8_t)sector, 1, (int16_t)i, (int16_t)j, r};
}
inline GenSym e_gl(int i, int j) { return {Fam::Egl, 0, 1, (int16_t)i, (int16_t)j, 0}; }
inline GenSym q_E(int i) { return {Fam::QE, 0, 1, (int16_t)i, 0, 0}; }
inline GenSym q_F(int i) { return {Fam::QF, 0, 1, (int16_t)i, 0, 0}; }
inline GenSym q_t(int j, int exp = 1) { return {Fam::QT, 0, (int8_t)exp, (int16_t)j, 0, 0}; }
inline GenSym y_e(int i, int r) { return {Fam::Ye, 0, 1, (int16_t)i, 0, r}; }
inline GenSym y_f(int i, int r) { return {Fam::Yf, 0, 1, (int16_t)i, 0, r}; }
inline GenSym y_zeta(int j, int r) { return {Fam::Yzeta, 0, 1, (int16_t)j, 0, r}; }
inline GenSym sy_E(int i, int r) { return {Fam::SYE, 0, 1, (int16_t)i, 0, r}; }
inline GenSym sy_F(int i, int r) { return {Fam::SYF, 0, 1, (int16_t)i, 0, r}; }
inline GenSym sy_H(int i, int r) { return {Fam::SYH, 0, 1, (int16_t)i, 0, r}; }
inline GenSym l_e(int i, int r) { return {Fam::Le, 0, 1, (int16_t)i, 0, r}; }
inline GenSym l_f(int i, int r) { return {Fam::Lf, 0, 1, (int16_t)i, 0, r}; }
inline GenSym l_phi(int sector, int j, int r, int exp = 1) {
    return {Fam::Lphi, (int8_t)sector, (int8_t)exp, (int16_t)j, 0, r};
}
inline GenSym l_psi(int sector, int i, int r, int exp = 1) {
    return {Fam::Lpsi, (int8_t)sector, (int8_t)exp, (int16_t)i, 0, r};
}
inline GenSym phi_ad(int sector, int i, int exp = 1) {
    return {Fam::PhiAd, (int8_t)sector, (int8_t)exp, (int16_t)i, 0, 0};
}
inline GenSym t_root(int exp) { return {Fam::TRoot, 0, (int8_t)exp, 0, 0, 0}; }

std::string gensym_str(const GenSym& g);
std::string word_str(const Word& w);

// Which algebra an element lives in; fixes rank, coefficient registry and
// the legal generator set.
struct AlgebraDescriptor {
    enum class Kind {
        RttRational,   // Y^rtt(gl_n) over C[hbar]
        RttFinite,     // finite quantum gl_n, RTT form
        RttAffine,     // quantum loop gl_n, RTT form
        EnvGl,         // U(gl_n)
        QEnvGl,        // quantum gl_n, Drinfeld-Jimbo form
        YangianDr,     // Drinfeld Yangian of gl_n
        LoopDr,        // quantum loop gl_n, new Drinfeld form
        ShiftedYangian,// Cartan-doubled Yangian quotient Y_mu (relation oracle only)
        ShiftedLoop,   // shifted quantum affine algebra (relation oracle only)
    };
    Kind kind;
    int n;
    RegistryPtr reg;
    int deformation;  // registry id of hbar or v
    std::vector<int> mu_b;      // b_i = alpha_i(mu) for the shifted kinds
    bool enhanced = false;      // n-th root of the diagonal product adjoined

    bool legal(const GenSym& g) const;
};

using DescPtr = std::shared_ptr<const AlgebraDescriptor>;

DescPtr make_descriptor(AlgebraDescriptor::Kind kind, int n, RegistryPtr reg,
                        std::vector<int> mu_b = {}, bool enhanced = false);

}  // namespace qloop
