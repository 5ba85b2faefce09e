#include "qloop/rmatrix.hpp"

#include <algorithm>
#include <numeric>

namespace qloop {

namespace {

RatFun rf(const Poly& p) { return RatFun(p); }

RegistryPtr spectral_registry(const char* deform_name, int nspec) {
    auto reg = std::make_shared<VarRegistry>();
    reg->add(deform_name, VarKind::Deformation);
    for (int k = 0; k < nspec; ++k) reg->add("s" + std::to_string(k + 1), VarKind::Spectral);
    return reg;
}

}  // namespace

CMat perm_op(int n, const RegistryPtr& reg) {
    CMat P(n, 2, RatFun::zero(reg));
    for (uint8_t i = 1; i <= n; ++i)
        for (uint8_t j = 1; j <= n; ++j) P.set({i, j}, {j, i}, RatFun::one(reg));
    return P;
}

CMat perm_op_v(int n, const RegistryPtr& reg, int v) {
    CMat P(n, 2, RatFun::zero(reg));
    for (uint8_t i = 1; i <= n; ++i)
        for (uint8_t j = 1; j <= n; ++j) {
            if (i == j)
                P.set({i, i}, {i, i}, RatFun::one(reg));
            else
                P.set({i, j}, {j, i}, rf(Poly::var(reg, v, i > j ? 1 : -1)));
        }
    return P;
}

CMat build_R(RKind kind, int n, const RegistryPtr& reg, int deform, std::vector<int> spectral) {
    CMat R(n, 2, RatFun::zero(reg));
    Poly h = Poly::var(reg, deform);
    switch (kind) {
        case RKind::Rational: {
            // (z - w) * 1 - hbar * P; the single spectral argument z - w is
            // passed as spectral = {z, w}.
            Poly zw = Poly::var(reg, spectral.at(0)) - Poly::var(reg, spectral.at(1));
            for (uint8_t i = 1; i <= n; ++i)
                for (uint8_t j = 1; j <= n; ++j) {
                    R.add({i, j}, {i, j}, rf(zw));
                    R.add({i, j}, {j, i}, rf(-h));
                }
            return R;
        }
        case RKind::Finite: {
            Poly vm1 = Poly::var(reg, deform, -1);
            Poly vp1 = Poly::var(reg, deform, 1);
            for (uint8_t i = 1; i <= n; ++i)
                for (uint8_t j = 1; j <= n; ++j)
                    R.set({i, j}, {i, j}, rf(i == j ? vm1 : Poly::constant(reg, 1)));
            for (uint8_t i = 1; i <= n; ++i)
                for (uint8_t j = 1; j <= n; ++j)
                    if (i > j) R.set({i, j}, {j, i}, rf(vm1 - vp1));
            return R;
        }
        case RKind::FiniteTilde: {
            Poly vm1 = Poly::var(reg, deform, -1);
            Poly vp1 = Poly::var(reg, deform, 1);
            for (uint8_t i = 1; i <= n; ++i)
                for (uint8_t j = 1; j <= n; ++j)
                    R.set({i, j}, {i, j}, rf(i == j ? vp1 : Poly::constant(reg, 1)));
            for (uint8_t i = 1; i <= n; ++i)
                for (uint8_t j = 1; j <= n; ++j)
                    if (i < j) R.set({i, j}, {j, i}, rf(vp1 - vm1));
            return R;
        }
        case RKind::Trig: {
            Poly z = Poly::var(reg, spectral.at(0));
            Poly w = Poly::var(reg, spectral.at(1));
            Poly vp1 = Poly::var(reg, deform, 1);
            Poly vm1 = Poly::var(reg, deform, -1);
            Poly diag_eq = vp1 * z - vm1 * w;
            Poly diag_ne = z - w;
            Poly off = vp1 - vm1;
            for (uint8_t i = 1; i <= n; ++i)
                for (uint8_t j = 1; j <= n; ++j)
                    R.set({i, j}, {i, j}, rf(i == j ? diag_eq : diag_ne));
            for (uint8_t i = 1; i <= n; ++i)
                for (uint8_t j = 1; j <= n; ++j)
                    if (i != j) R.set({i, j}, {j, i}, rf(off * (i < j ? z : w)));
            return R;
        }
    }
    throw std::logic_error("build_R: unreachable");
}

CMat antisymmetrizer(int n, int r, const RegistryPtr& reg) {
    CMat A(n, r, RatFun::zero(reg));
    std::vector<int> perm(static_cast<size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // sign
        int inv = 0;
        for (size_t a = 0; a < perm.size(); ++a)
            for (size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inv;
        Rat sgn = (inv % 2) ? -1 : 1;
        // sigma sends e_{a_1} x ... to e_{a_{sigma^{-1}(1)}} x ...
        TIdx col(static_cast<size_t>(r), 1);
        TIdx row(static_cast<size_t>(r));
        while (true) {
            for (size_t k = 0; k < row.size(); ++k) row[k] = col[static_cast<size_t>(perm[k])];
            A.add(row, col, RatFun::constant(reg, sgn));
            if (!CMat::next(col, n)) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return A;
}

CMat antisymmetrizer_v(int n, int r, const RegistryPtr& reg, int v) {
    // Transpositions (k,k+1) act through the v-permutation on adjacent factors;
    // each permutation contributes via a reduced decomposition.
    CMat Pv = perm_op_v(n, reg, v);
    RatFun one = RatFun::one(reg);
    CMat A(n, r, RatFun::zero(reg));
    std::vector<int> perm(static_cast<size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // build the operator for this permutation by bubble-sorting back to id
        std::vector<int> word;  // adjacent transposition positions
        std::vector<int> p = perm;
        for (size_t a = 0; a < p.size(); ++a)
            for (size_t b = 0; b + 1 < p.size(); ++b)
                if (p[b] > p[b + 1]) {
                    std::swap(p[b], p[b + 1]);
                    word.push_back(static_cast<int>(b));
                }
        CMat op = CMat::identity(n, r, RatFun::zero(reg), one);
        for (int pos : word) op = op * Pv.embed_pair(r, pos, pos + 1, one);
        op.scale((word.size() % 2) ? Rat(-1) : Rat(1));
        A = A + op;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return A;
}

CMat fused_R(RKind kind, int n, int r, const RegistryPtr& reg, int deform,
             const std::vector<Poly>& args) {
    RatFun one = RatFun::one(reg);
    CMat acc = CMat::identity(n, r, RatFun::zero(reg), one);
    Poly h = Poly::var(reg, deform);
    Poly vp1 = Poly::var(reg, deform, 1);
    Poly vm1 = Poly::var(reg, deform, -1);
    auto pair_R = [&](int i, int j) -> CMat {
        CMat R(n, 2, RatFun::zero(reg));
        if (kind == RKind::Rational) {
            // uncleared: 1 - hbar/(z_i - z_j) P
            Poly d = args[static_cast<size_t>(i)] - args[static_cast<size_t>(j)];
            RatFun c = rf(-h);
            c.div_poly(d);
            for (uint8_t a = 1; a <= n; ++a)
                for (uint8_t b = 1; b <= n; ++b) {
                    R.add({a, b}, {a, b}, one);
                    R.add({a, b}, {b, a}, c);
                }
            return R;
        }
        const Poly& z = args[static_cast<size_t>(i)];
        const Poly& w = args[static_cast<size_t>(j)];
        Poly diag_eq = vp1 * z - vm1 * w;
        Poly diag_ne = z - w;
        Poly off = vp1 - vm1;
        for (uint8_t a = 1; a <= n; ++a)
            for (uint8_t b = 1; b <= n; ++b)
                R.set({a, b}, {a, b}, rf(a == b ? diag_eq : diag_ne));
        for (uint8_t a = 1; a <= n; ++a)
            for (uint8_t b = 1; b <= n; ++b)
                if (a != b) R.set({a, b}, {b, a}, rf(off * (a < b ? z : w)));
        return R;
    };
    // (R_{r-1,r}) (R_{r-2,r} R_{r-2,r-1}) ... (R_{1r} ... R_{12}), 1-based factors.
    for (int a = r - 1; a >= 1; --a)
        for (int b = r; b >= a + 1; --b)
            acc = acc * pair_R(a - 1, b - 1).embed_pair(r, a - 1, b - 1, one);
    return acc;
}

namespace {

CheckResult zero_check(const CMat& m, long checked) {
    CheckResult res;
    res.entries_checked = checked;
    if (!m.is_zero()) {
        res.pass = false;
        const auto& [rc, v] = *m.entries().begin();
        std::string row, col;
        for (auto x : rc.first) row += std::to_string(int(x));
        for (auto x : rc.second) col += std::to_string(int(x));
        res.detail = "entry (" + row + "," + col + ") = " + v.str();
    }
    return res;
}

}  // namespace

CheckResult check_YBE(RKind kind, int n) {
    if (kind == RKind::Rational) {
        auto reg = spectral_registry("hbar", 3);
        // cleared form: both sides carry the same cleared denominators
        auto R = [&](int a, int b) {
            return build_R(RKind::Rational, n, reg, 0, {1 + a, 1 + b})
                .embed_pair(3, a, b, RatFun::one(reg));
        };
        CMat lhs = R(0, 1) * R(0, 2) * R(1, 2);
        CMat rhs = R(1, 2) * R(0, 2) * R(0, 1);
        return zero_check(lhs - rhs, static_cast<long>(n) * n * n * n * n * n);
    }
    if (kind == RKind::Finite || kind == RKind::FiniteTilde) {
        auto reg = spectral_registry("v", 0);
        CMat R2 = build_R(kind, n, reg, 0);
        auto R = [&](int a, int b) { return R2.embed_pair(3, a, b, RatFun::one(reg)); };
        CMat lhs = R(0, 1) * R(0, 2) * R(1, 2);
        CMat rhs = R(1, 2) * R(0, 2) * R(0, 1);
        return zero_check(lhs - rhs, static_cast<long>(n) * n * n * n * n * n);
    }
    auto reg = spectral_registry("v", 3);
    auto R = [&](int a, int b) {
        return build_R(RKind::Trig, n, reg, 0, {1 + a, 1 + b})
            .embed_pair(3, a, b, RatFun::one(reg));
    };
    CMat lhs = R(0, 1) * R(0, 2) * R(1, 2);
    CMat rhs = R(1, 2) * R(0, 2) * R(0, 1);
    return zero_check(lhs - rhs, static_cast<long>(n) * n * n * n * n * n);
}

CheckResult check_R_identities(int n) {
    long checked = 0;
    // (1) Rtilde * P * R * P = 1.
    {
        auto reg = spectral_registry("v", 0);
        CMat R = build_R(RKind::Finite, n, reg, 0);
        CMat Rt = build_R(RKind::FiniteTilde, n, reg, 0);
        CMat P = perm_op(n, reg);
        CMat lhs = Rt * P * R * P;
        CMat I = CMat::identity(n, 2, RatFun::zero(reg), RatFun::one(reg));
        auto res = zero_check(lhs - I, static_cast<long>(n) * n * n * n);
        if (!res.pass) {
            res.detail = "finite R-tilde inversion: " + res.detail;
            return res;
        }
        checked += res.entries_checked;
    }
    // (2) R_trig(z,w) = (z-w) R + (v-v^{-1}) z P.
    {
        auto reg = spectral_registry("v", 2);
        CMat Rt = build_R(RKind::Trig, n, reg, 0, {1, 2});
        CMat R = build_R(RKind::Finite, n, reg, 0);
        CMat P = perm_op(n, reg);
        Poly z = Poly::var(reg, 1), w = Poly::var(reg, 2);
        Poly off = Poly::var(reg, 0, 1) - Poly::var(reg, 0, -1);
        CMat rhs = R.coeff_mul(rf(z - w)) + P.coeff_mul(rf(off * z));
        auto res = zero_check(Rt - rhs, static_cast<long>(n) * n * n * n);
        if (!res.pass) {
            res.detail = "trig vs finite R: " + res.detail;
            return res;
        }
        checked += res.entries_checked;
    }
    // (3) R_trig(z,w) P R_trig(w,z) P = (vz - v^{-1}w)(vw - v^{-1}z) * 1.
    {
        auto reg = spectral_registry("v", 2);
        CMat Rzw = build_R(RKind::Trig, n, reg, 0, {1, 2});
        CMat Rwz = build_R(RKind::Trig, n, reg, 0, {2, 1});
        CMat P = perm_op(n, reg);
        Poly z = Poly::var(reg, 1), w = Poly::var(reg, 2);
        Poly vp = Poly::var(reg, 0, 1), vm = Poly::var(reg, 0, -1);
        Poly scal = (vp * z - vm * w) * (vp * w - vm * z);
        CMat rhs = CMat::identity(n, 2, RatFun::zero(reg), rf(scal));
        auto res = zero_check(Rzw * P * Rwz * P - rhs, static_cast<long>(n) * n * n * n);
        if (!res.pass) {
            res.detail = "trig unitarity: " + res.detail;
            return res;
        }
        checked += res.entries_checked;
    }
    CheckResult ok;
    ok.entries_checked = checked;
    return ok;
}

CheckResult fused_R_equals_antisymmetrizer(RKind kind, int n, int r) {
    if (kind == RKind::Rational) {
        auto reg = spectral_registry("hbar", 1);
        Poly z = Poly::var(reg, 1), h = Poly::var(reg, 0);
        std::vector<Poly> args;
        for (int k = 0; k < r; ++k) args.push_back(z - Rat(k) * h);
        CMat F = fused_R(RKind::Rational, n, r, reg, 0, args);
        CMat A = antisymmetrizer(n, r, reg);
        return zero_check(F - A, 1);
    }
    auto reg = spectral_registry("v", 1);
    Poly z = Poly::var(reg, 1);
    std::vector<Poly> args;
    for (int k = 0; k < r; ++k) args.push_back(Poly::var(reg, 0, 2 * k) * z);
    CMat F = fused_R(RKind::Trig, n, r, reg, 0, args);
    CMat Av = antisymmetrizer_v(n, r, reg, 0);
    Poly scal = Poly::constant(reg, 1);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            scal *= Poly::var(reg, 0, 2 * i) - Poly::var(reg, 0, 2 * j);
    scal *= z.pow(r * (r - 1) / 2);
    return zero_check(F - Av.coeff_mul(rf(scal)), 1);
}

}  // namespace qloop
