#pragma once

#include "qloop/tensormat.hpp"

namespace qloop {

enum class RKind { Rational, Finite, FiniteTilde, Trig };

using CMat = TensorMat<RatFun>;

// Permutation operator P and the v-permutation.
CMat perm_op(int n, const RegistryPtr& reg);
CMat perm_op_v(int n, const RegistryPtr& reg, int v);

// R-matrices. The rational one is emitted with denominator cleared,
// (z-w) - hbar P, so all entries stay polynomial; `spectral` supplies the
// variable ids ({z,w} for Rational/Trig, unused for the finite ones).
CMat build_R(RKind kind, int n, const RegistryPtr& reg, int deform,
             std::vector<int> spectral = {});

// Full antisymmetrizers on r tensor factors.
CMat antisymmetrizer(int n, int r, const RegistryPtr& reg);
CMat antisymmetrizer_v(int n, int r, const RegistryPtr& reg, int v);

// Fused R-matrix R(z_1,...,z_r) built from pairwise R's; `args` gives for
// each factor its spectral argument as a polynomial.
// kind Rational uses R(z_i - z_j) in uncleared form 1 - hbar/(z_i - z_j) P,
// so the arguments must keep all z_i - z_j atomizable or scalar.
CMat fused_R(RKind kind, int n, int r, const RegistryPtr& reg, int deform,
             const std::vector<Poly>& args);

struct CheckResult {
    bool pass = true;
    long entries_checked = 0;
    std::string detail;  // first offending entry, empty on pass
};

// Yang-Baxter: R12 R13 R23 = R23 R13 R12 entrywise (exact).
CheckResult check_YBE(RKind kind, int n);

// The three exact R-matrix identities tying the finite/trig R's together.
CheckResult check_R_identities(int n);

// Fused specialization vs antisymmetrizer:
//   rational: R(z, z-h, ..., z-(r-1)h) = A_r
//   trig:     R(z, v^2 z, ..., v^{2(r-1)} z) = prod_{0<=i<j<r}(v^{2i}-v^{2j}) z^{r(r-1)/2} Av_r
CheckResult fused_R_equals_antisymmetrizer(RKind kind, int n, int r);

}  // namespace qloop
