#include "doctest.h"

#include "qloop/rmatrix.hpp"

using namespace qloop;

TEST_CASE("rational R matrix n=2 is (z-w) - hbar P") {
    auto reg = std::make_shared<VarRegistry>();
    reg->add("hbar", VarKind::Deformation);
    reg->add("z", VarKind::Spectral);
    reg->add("w", VarKind::Spectral);
    auto R = build_R(RKind::Rational, 2, reg, 0, {1, 2});
    Poly zw = Poly::var(reg, 1) - Poly::var(reg, 2);
    Poly h = Poly::var(reg, 0);
    CHECK(R.at({1, 2}, {1, 2}) == RatFun(zw));
    CHECK(R.at({1, 2}, {2, 1}) == RatFun(-h));
    CHECK(R.at({1, 1}, {1, 1}) == RatFun(zw - h));
}

TEST_CASE("finite R matrix n=1 is the 1x1 matrix v^{-1}") {
    auto reg = std::make_shared<VarRegistry>();
    reg->add("v", VarKind::Deformation);
    auto R = build_R(RKind::Finite, 1, reg, 0);
    CHECK(R.at({1, 1}, {1, 1}) == RatFun(Poly::var(reg, 0, -1)));
}

TEST_CASE("trig R matrix entry ((1,2),(2,1)) is (v - v^{-1}) z") {
    auto reg = std::make_shared<VarRegistry>();
    reg->add("v", VarKind::Deformation);
    reg->add("z", VarKind::Spectral);
    reg->add("w", VarKind::Spectral);
    auto R = build_R(RKind::Trig, 2, reg, 0, {1, 2});
    Poly expect = (Poly::var(reg, 0, 1) - Poly::var(reg, 0, -1)) * Poly::var(reg, 1);
    CHECK(R.at({1, 2}, {2, 1}) == RatFun(expect));
}

TEST_CASE("Yang-Baxter equations hold exactly") {
    for (int n : {2, 3}) {
        CHECK(check_YBE(RKind::Rational, n).pass);
        CHECK(check_YBE(RKind::Finite, n).pass);
        CHECK(check_YBE(RKind::Trig, n).pass);
    }
}

TEST_CASE("R identity suite") {
    CHECK(check_R_identities(2).pass);
    CHECK(check_R_identities(3).pass);
}

TEST_CASE("fused R equals antisymmetrizer (rational)") {
    for (int n : {2, 3})
        for (int r = 2; r <= n; ++r)
            CHECK(fused_R_equals_antisymmetrizer(RKind::Rational, n, r).pass);
}

TEST_CASE("fused R equals scaled v-antisymmetrizer (trig)") {
    for (int n : {2, 3})
        for (int r = 2; r <= n; ++r)
            CHECK(fused_R_equals_antisymmetrizer(RKind::Trig, n, r).pass);
}
