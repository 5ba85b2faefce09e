#include "doctest.h"

#include "qloop/poly.hpp"
#include "qloop/ratfun.hpp"
#include "qloop/series.hpp"

using namespace qloop;

namespace {

RegistryPtr mk_reg() {
    auto reg = std::make_shared<VarRegistry>();
    reg->add("hbar", VarKind::Deformation);
    reg->add("w11", VarKind::Gklo);
    reg->add("w12", VarKind::Gklo);
    reg->add("z", VarKind::Spectral);
    return reg;
}

RegistryPtr mk_vreg() {
    auto reg = std::make_shared<VarRegistry>();
    reg->add("v", VarKind::Deformation);
    reg->add("x1", VarKind::Shuffle);
    reg->add("x2", VarKind::Shuffle);
    return reg;
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
    auto reg = mk_reg();
    Poly h = Poly::var(reg, 0);
    Poly w11 = Poly::var(reg, 1);
    CHECK((h * h).str() == "hbar^2");
    Poly p = (w11 + h) * (w11 - h);
    CHECK(p == w11 * w11 - h * h);
    CHECK((p * Poly::zero(reg)).is_zero());

    // expand-and-collect example over the v-registry
    auto vreg = mk_vreg();
    Poly v2 = Poly::var(vreg, 0, -2);
    Poly x1 = Poly::var(vreg, 1), x2 = Poly::var(vreg, 2);
    Poly lhs = (x1 - v2 * x2) + (v2 * x1 - x2);
    Poly rhs = (Poly::constant(vreg, 1) + v2) * (x1 - x2);
    CHECK(lhs == rhs);
}

TEST_CASE("poly exact division") {
    auto reg = mk_reg();
    Poly h = Poly::var(reg, 0), w11 = Poly::var(reg, 1), w12 = Poly::var(reg, 2);
    Poly a = w11 - w12;
    Poly b = w11 - w12 - h;
    Poly prod = a * b * (w11 + w12);
    auto q = prod.try_divide(a);
    REQUIRE(q.has_value());
    CHECK(*q == b * (w11 + w12));
    CHECK(!(a * a + h).try_divide(a).has_value());
    // Laurent: divide by a monomial times an atom
    auto vreg = mk_vreg();
    Poly x1 = Poly::var(vreg, 1), x2 = Poly::var(vreg, 2);
    Poly vp = Poly::var(vreg, 0);
    Poly lp = x1 * Poly::var(vreg, 2, -1) - vp;  // x1/x2 - v
    auto q2 = (lp * x1).try_divide(lp);
    REQUIRE(q2.has_value());
    CHECK(*q2 == x1);
}

TEST_CASE("atom recognition and orientation") {
    auto reg = mk_reg();
    Poly h = Poly::var(reg, 0), w11 = Poly::var(reg, 1), w12 = Poly::var(reg, 2);
    // w12 - w11 + h  ->  -(w11 - w12 - h)
    auto rec = recognize_atom(w12 - w11 + h, 0);
    REQUIRE(rec.has_value());
    CHECK(rec->kind == AtomKind::Diff);
    CHECK(rec->atom == w11 - w12 - h);
    CHECK(rec->unit_coeff == Rat(-1));

    auto vreg = mk_vreg();
    Poly x1 = Poly::var(vreg, 1), x2 = Poly::var(vreg, 2), v = Poly::var(vreg, 0);
    // x2 - v^{-1} x1 = -v^{-1} (x1 - v x2)
    auto rec2 = recognize_atom(x2 - Poly::var(vreg, 0, -1) * x1, 0);
    REQUIRE(rec2.has_value());
    CHECK(rec2->atom == x1 - v * x2);
    // unit atoms: 1 - v^{-3} = -v^{-3}(1 - v^3)
    auto rec3 = recognize_atom(Poly::constant(vreg, 1) - Poly::var(vreg, 0, -3), 0);
    REQUIRE(rec3.has_value());
    CHECK(rec3->kind == AtomKind::Unit);
    CHECK(rec3->atom == Poly::constant(vreg, 1) - Poly::var(vreg, 0, 3));
    CHECK(rec3->unit_coeff == Rat(-1));
    CHECK(rec3->unit_mono[0] == -3);
}

TEST_CASE("ratfun cancellation") {
    auto reg = mk_reg();
    Poly h = Poly::var(reg, 0), w11 = Poly::var(reg, 1), w12 = Poly::var(reg, 2), z = Poly::var(reg, 3);
    // (w11 - w12)/(w11 - w12) -> 1
    RatFun f(w11 - w12);
    f.div_poly(w11 - w12);
    CHECK(f == RatFun::one(reg));
    // (z - w11)^{-1} * (z - w11) -> 1
    RatFun g = RatFun::one(reg);
    g.div_poly(z - w11);
    g.mul_poly(z - w11);
    CHECK(g == RatFun::one(reg));
    // 1/(w11-w12) * 1/(w12-w11+h): canonical orientation
    RatFun a = RatFun::one(reg);
    a.div_poly(w11 - w12);
    RatFun b = RatFun::one(reg);
    b.div_poly(w12 - w11 + h);
    RatFun p = a * b;
    CHECK(p.num() == Poly::constant(reg, -1));
    REQUIRE(p.den().size() == 2);
    CHECK(p.den().count(w11 - w12) == 1);
    CHECK(p.den().count(w11 - w12 - h) == 1);
}

TEST_CASE("ratfun addition with common denominators") {
    auto reg = mk_reg();
    Poly w11 = Poly::var(reg, 1), w12 = Poly::var(reg, 2);
    RatFun a(Poly::constant(reg, 1));
    a.div_poly(w11 - w12);
    RatFun b(Poly::constant(reg, 1));
    b.div_poly(w12 - w11);
    CHECK((a + b).is_zero());
    RatFun c = a + a;
    CHECK(c.num() == Poly::constant(reg, 2));
    CHECK((c - a - a).is_zero());
}

TEST_CASE("ratfun shift substitution") {
    auto reg = mk_reg();
    Poly h = Poly::var(reg, 0), w11 = Poly::var(reg, 1), w12 = Poly::var(reg, 2);
    RatFun f(w11);
    CHECK(f.subst_shift(1, Rat(1), 0).num() == w11 + h);
    RatFun g = RatFun::one(reg);
    g.div_poly(w11 - w12);
    RatFun gs = g.subst_shift(1, Rat(1), 0);
    RatFun expect = RatFun::one(reg);
    expect.div_poly(w11 - w12 + h);
    CHECK(gs == expect);
}

TEST_CASE("trig half-variable rule") {
    auto reg = std::make_shared<VarRegistry>();
    reg->add("v", VarKind::Deformation);
    reg->add("om11", VarKind::Gklo);
    RatFun f(Poly::var(reg, 1, 2));
    RatFun fs = f.subst_vpow(1, 1, 0);
    CHECK(fs.num() == Poly::var(reg, 0, 2) * Poly::var(reg, 1, 2));
}

TEST_CASE("symmetrize") {
    auto vreg = mk_vreg();
    Poly x1 = Poly::var(vreg, 1), x2 = Poly::var(vreg, 2);
    Poly s = symmetrize_blocks(x1, {{1, 2}});
    Poly expect = (x1 + x2) * Rat(1, 2);
    CHECK(s == expect);
    CHECK(symmetrize_blocks(x1 * x2, {{1, 2}}) == x1 * x2);
    CHECK(symmetrize_blocks(x1 - x2, {{1, 2}}).is_zero());
    // projection property
    Poly f = x1 * x1 * x2;
    CHECK(symmetrize_blocks(symmetrize_blocks(f, {{1, 2}}), {{1, 2}}) ==
          symmetrize_blocks(f, {{1, 2}}));
    CHECK(is_symmetric_in_blocks(s, {{1, 2}}));
    CHECK(!is_symmetric_in_blocks(x1, {{1, 2}}));
}

TEST_CASE("series invert and shift") {
    auto reg = mk_reg();
    // (1 + h a z^{-1})^{-1} at L=2 -> 1 - h a z^{-1} + h^2 a^2 z^{-2}, with a := w11
    Poly h = Poly::var(reg, 0), a = Poly::var(reg, 1);
    Series<RatFun> s(SeriesDir::ZInv, RatFun::zero(reg), 0, 2);
    s.set(0, RatFun::one(reg));
    s.set(1, RatFun(h * a));
    auto inv = s.inverse(RatFun::one(reg));
    CHECK(inv.at(0) == RatFun::one(reg));
    CHECK(inv.at(1) == RatFun(-(h * a)));
    CHECK(inv.at(2) == RatFun(h * h * a * a));
    auto prod = s * inv;
    CHECK(prod.at(0) == RatFun::one(reg));
    CHECK(prod.at(1).is_zero());
    CHECK(prod.at(2).is_zero());
    // inversion requires a unit leading term
    Series<RatFun> bad(SeriesDir::ZInv, RatFun::zero(reg), 1, 2);
    bad.set(1, RatFun::one(reg));
    auto binv = bad.inverse(RatFun::one(reg));
    CHECK(binv.lo() == -1);  // z * (1 + O(z^{-1})), not a power series in z^{-1}

    // z-shift: f(z) = z^{-1}; f(z - h) = z^{-1} + h z^{-2} + h^2 z^{-3} + ...
    Series<RatFun> f(SeriesDir::ZInv, RatFun::zero(reg), 0, 3);
    f.set(1, RatFun::one(reg));
    auto fs = f.subst_shift(RatFun(-h));
    CHECK(fs.at(1) == RatFun::one(reg));
    CHECK(fs.at(2) == RatFun(h));
    CHECK(fs.at(3) == RatFun(h * h));
}

TEST_CASE("series window honesty") {
    auto reg = mk_reg();
    Series<RatFun> s(SeriesDir::ZInv, RatFun::zero(reg), 0, 2);
    s.set(0, RatFun::one(reg));
    CHECK_THROWS_AS(s.at(3), std::domain_error);
    auto t = s * s;
    CHECK(t.hi() == 2);
}
