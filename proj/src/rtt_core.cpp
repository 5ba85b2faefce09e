#include "qloop/rtt.hpp"

#include <array>
#include <sstream>
#include <tuple>

namespace qloop {

namespace {

RegistryPtr fresh_registry(const char* deform, int nframing) {
    auto reg = std::make_shared<VarRegistry>();
    reg->add(deform, VarKind::Deformation);
    for (int s = 1; s <= nframing; ++s) reg->add("z" + std::to_string(s), VarKind::Framing);
    return reg;
}

// ---- generator order keys -------------------------------------------------

using Key = std::array<int, 6>;

Key ord_key(const AlgebraDescriptor& d, const GenSym& g) {
    switch (d.kind) {
        case AlgebraDescriptor::Kind::RttRational:
            return {g.i, g.j, g.r, 0, 0, 0};
        case AlgebraDescriptor::Kind::EnvGl:
            return {g.i, g.j, 0, 0, 0, 0};
        case AlgebraDescriptor::Kind::QEnvGl: {
            if (g.fam == Fam::TRoot) return {1, -1, 0, 0, 0, 0};
            int cls = g.fam == Fam::QF ? 0 : g.fam == Fam::QT ? 1 : 2;
            return {cls, g.i, g.inv > 0 ? 0 : 1, 0, 0, 0};
        }
        case AlgebraDescriptor::Kind::RttFinite: {
            if (g.fam == Fam::TRoot) return {1, 0, 0, -2, 0, 0};
            int cls = g.i > g.j ? 0 : g.i == g.j ? 1 : 2;
            if (cls == 0) return {0, g.j, g.i, 0, g.sector > 0 ? 0 : 1, 0};
            if (cls == 1) return {1, g.i, g.i, 0, g.sector > 0 ? 0 : 1, 0};
            return {2, g.i, g.j, 0, g.sector > 0 ? 0 : 1, 0};
        }
        case AlgebraDescriptor::Kind::RttAffine: {
            // Level-major order: level transfer within a relation line then
            // moves monotonically toward the mode boundary, which terminates.
            if (g.fam == Fam::TRoot) return {-1, 0, 0, -2, 0, 0};
            int cls = g.i > g.j ? 0 : g.i == g.j ? 1 : 2;
            int lvl = g.r < 0 ? -g.r : g.r;
            return {lvl, cls, g.i, g.j, g.sector > 0 ? 0 : 1, 0};
        }
        default:
            return {int(g.fam), g.sector, g.i, g.j, g.r, g.inv};
    }
}

// ---- R-matrix term tables ---------------------------------------------------

struct RTerm {
    int a2, c2;   // column pair of the R-matrix entry
    int dz, dw;   // spectral exponents
    int vpow;     // power of the deformation variable in the coefficient
    Rat coeff;    // rational multiplier
    bool minus_v_inv = false;  // marks the (v - v^{-1}) combination
};

// Terms of row (a,c) of the chosen R-matrix. kindSel: 0 = rational cleared,
// 1 = finite R, 2 = finite R-tilde, 3 = trig.
std::vector<RTerm> r_row(int kindSel, int a, int c) {
    std::vector<RTerm> t;
    switch (kindSel) {
        case 0:
            t.push_back({a, c, 1, 0, 0, Rat(1)});
            t.push_back({a, c, 0, 1, 0, Rat(-1)});
            t.push_back({c, a, 0, 0, 1, Rat(-1)});  // -hbar P
            break;
        case 1:
            if (a == c) {
                t.push_back({a, a, 0, 0, -1, Rat(1)});
            } else {
                t.push_back({a, c, 0, 0, 0, Rat(1)});
                if (a > c) t.push_back({c, a, 0, 0, -1, Rat(1), true});  // v^{-1} - v
            }
            break;
        case 2:
            if (a == c) {
                t.push_back({a, a, 0, 0, 1, Rat(1)});
            } else {
                t.push_back({a, c, 0, 0, 0, Rat(1)});
                if (a < c) t.push_back({c, a, 0, 0, 1, Rat(1), true});  // v - v^{-1}
            }
            break;
        case 3:
            if (a == c) {
                t.push_back({a, a, 1, 0, 1, Rat(1)});
                t.push_back({a, a, 0, 1, -1, Rat(-1)});
            } else {
                t.push_back({a, c, 1, 0, 0, Rat(1)});
                t.push_back({a, c, 0, 1, 0, Rat(-1)});
                if (a < c) t.push_back({c, a, 1, 0, 1, Rat(1), true});
                if (a > c) t.push_back({c, a, 0, 1, 1, Rat(1), true});
            }
            break;
    }
    return t;
}

// Terms of column (b,d): returns row pairs (a2,c2) and coefficients.
std::vector<RTerm> r_col(int kindSel, int b, int d) {
    std::vector<RTerm> t;
    switch (kindSel) {
        case 0:
            t.push_back({b, d, 1, 0, 0, Rat(1)});
            t.push_back({b, d, 0, 1, 0, Rat(-1)});
            t.push_back({d, b, 0, 0, 1, Rat(-1)});
            break;
        case 1:
            if (b == d) {
                t.push_back({b, b, 0, 0, -1, Rat(1)});
            } else {
                t.push_back({b, d, 0, 0, 0, Rat(1)});
                if (d > b) t.push_back({d, b, 0, 0, -1, Rat(1), true});
            }
            break;
        case 2:
            if (b == d) {
                t.push_back({b, b, 0, 0, 1, Rat(1)});
            } else {
                t.push_back({b, d, 0, 0, 0, Rat(1)});
                if (d < b) t.push_back({d, b, 0, 0, 1, Rat(1), true});
            }
            break;
        case 3:
            if (b == d) {
                t.push_back({b, b, 1, 0, 1, Rat(1)});
                t.push_back({b, b, 0, 1, -1, Rat(-1)});
            } else {
                t.push_back({b, d, 1, 0, 0, Rat(1)});
                t.push_back({b, d, 0, 1, 0, Rat(-1)});
                if (d < b) t.push_back({d, b, 1, 0, 1, Rat(1), true});
                if (d > b) t.push_back({d, b, 0, 1, 1, Rat(1), true});
            }
            break;
    }
    return t;
}

RatFun rterm_coeff(const DescPtr& desc, const RTerm& t) {
    const auto& reg = desc->reg;
    Poly c = Poly::var(reg, desc->deformation, t.vpow) * t.coeff;
    if (t.minus_v_inv) {
        // coeff encodes +-(v^{+-1} - v^{-+1}) via vpow sign
        c = (Poly::var(reg, desc->deformation, t.vpow) -
             Poly::var(reg, desc->deformation, -t.vpow)) *
            t.coeff;
    }
    return RatFun(c);
}

// Mode factor of the generating series: the scalar/generator at z-exponent -m.
// Returns nullopt when the coefficient vanishes identically.
std::optional<NCPoly> series_factor(const Algebra& A, int sector, int i, int j, int m) {
    const auto& d = *A.desc;
    if (d.kind == AlgebraDescriptor::Kind::RttRational) {
        if (m < 0) return std::nullopt;
        if (m == 0) {
            if (i != j) return std::nullopt;
            return A.one();
        }
        return A.gen(t_rat(i, j, m)) * RatFun(A.deform());
    }
    bool finite = d.kind == AlgebraDescriptor::Kind::RttFinite;
    if (finite && m != 0) return std::nullopt;
    if (sector > 0 && m < 0) return std::nullopt;
    if (sector < 0 && m > 0) return std::nullopt;
    if (m == 0 && ((sector > 0 && i > j) || (sector < 0 && i < j))) return std::nullopt;
    return A.gen(t_trig(sector, i, j, m));
}

int kind_sel(const Algebra& A, int e1, int e2) {
    switch (A.desc->kind) {
        case AlgebraDescriptor::Kind::RttRational: return 0;
        case AlgebraDescriptor::Kind::RttFinite: return (e1 > 0 && e2 < 0) ? 2 : 1;
        case AlgebraDescriptor::Kind::RttAffine: return 3;
        default: throw std::logic_error("rtt_relation: not an RTT algebra");
    }
}

}  // namespace

NCPoly rtt_relation(const Algebra& A, int e1, int e2, int a, int c, int b, int d, int p,
                    int q) {
    int sel = kind_sel(A, e1, e2);
    NCPoly rel = A.zero();
    for (const auto& t : r_row(sel, a, c)) {
        auto f1 = series_factor(A, e1, t.a2, b, t.dz - p);
        if (!f1) continue;
        auto f2 = series_factor(A, e2, t.c2, d, t.dw - q);
        if (!f2) continue;
        rel += rterm_coeff(A.desc, t) * (*f1 * *f2);
    }
    for (const auto& t : r_col(sel, b, d)) {
        auto f2 = series_factor(A, e2, c, t.c2, t.dw - q);
        if (!f2) continue;
        auto f1 = series_factor(A, e1, a, t.a2, t.dz - p);
        if (!f1) continue;
        rel -= rterm_coeff(A.desc, t) * (*f2 * *f1);
    }
    return rel;
}

namespace {

// ---- rule oracles -----------------------------------------------------------

std::optional<NCPoly> rational_rule(const Algebra& A, const GenSym& g1, const GenSym& g2) {
    if (ord_key(*A.desc, g1) <= ord_key(*A.desc, g2)) return std::nullopt;
    const int r = g1.r, s = g2.r, i = g1.i, j = g1.j, k = g2.i, l = g2.j;
    NCPoly out = NCPoly::word(A.desc, {g2, g1}, RatFun::one(A.desc->reg));
    Poly h = A.deform();
    for (int aa = 1; aa <= std::min(r, s); ++aa) {
        // hbar ( t^{(a-1)}_{kj} t^{(r+s-a)}_{il} - t^{(r+s-a)}_{kj} t^{(a-1)}_{il} ),
        // with t^{(0)}_{xy} = hbar^{-1} delta_{xy} folded in.
        int hi = r + s - aa;
        if (aa == 1) {
            if (k == j) out += A.gen(t_rat(i, l, hi));
            if (i == l) out -= A.gen(t_rat(k, j, hi));
        } else {
            out += (A.gen(t_rat(k, j, aa - 1)) * A.gen(t_rat(i, l, hi))).mul_poly(h);
            out -= (A.gen(t_rat(k, j, hi)) * A.gen(t_rat(i, l, aa - 1))).mul_poly(h);
        }
    }
    return out;
}

std::optional<NCPoly> envgl_rule(const Algebra& A, const GenSym& g1, const GenSym& g2) {
    if (ord_key(*A.desc, g1) <= ord_key(*A.desc, g2)) return std::nullopt;
    NCPoly out = NCPoly::word(A.desc, {g2, g1}, RatFun::one(A.desc->reg));
    if (g1.j == g2.i) out += A.gen(e_gl(g1.i, g2.j));
    if (g2.j == g1.i) out -= A.gen(e_gl(g2.i, g1.j));
    return out;
}

std::optional<NCPoly> qenv_rule(const Algebra& A, const GenSym& g1, const GenSym& g2) {
    const auto& reg = A.desc->reg;
    auto vpow = [&](int e) { return RatFun(Poly::var(reg, A.desc->deformation, e)); };
    // central root and Cartan cancellations first
    if (g1.fam == Fam::TRoot && g2.fam == Fam::TRoot && g1.inv != g2.inv) return A.one();
    if (g1.fam == Fam::QT && g2.fam == Fam::QT && g1.i == g2.i && g1.inv != g2.inv)
        return A.one();
    if (ord_key(*A.desc, g1) <= ord_key(*A.desc, g2)) return std::nullopt;
    auto swap = [&]() { return NCPoly::word(A.desc, {g2, g1}, RatFun::one(reg)); };
    if (g1.fam == Fam::TRoot || g2.fam == Fam::TRoot) return swap();  // central
    if (g1.fam == Fam::QT && g2.fam == Fam::QT) return swap();
    if (g1.fam == Fam::QE && g2.fam == Fam::QF) {
        // E_i F_j = F_j E_i + delta (t_i^{-1} t_{i+1} - t_i t_{i+1}^{-1})/(v - v^{-1})
        NCPoly out = swap();
        if (g1.i == g2.i) {
            Poly den = Poly::var(reg, A.desc->deformation, 1) -
                       Poly::var(reg, A.desc->deformation, -1);
            NCPoly K = NCPoly::word(A.desc, {q_t(g1.i, -1), q_t(g1.i + 1, 1)},
                                    RatFun::one(reg)) -
                       NCPoly::word(A.desc, {q_t(g1.i, 1), q_t(g1.i + 1, -1)},
                                    RatFun::one(reg));
            K.div_poly(den);
            out += K;
        }
        return out;
    }
    if ((g1.fam == Fam::QE || g1.fam == Fam::QF) && g2.fam == Fam::QT) {
        // X_i t_j^e = v^{+-e(delta_{ji} - delta_{j,i+1})} t_j^e X_i
        int d = (g2.i == g1.i ? 1 : 0) - (g2.i == g1.i + 1 ? 1 : 0);
        int sign = g1.fam == Fam::QE ? 1 : -1;
        return vpow(sign * d * g2.inv) * swap();
    }
    if (g1.fam == Fam::QT && (g2.fam == Fam::QE || g2.fam == Fam::QF)) {
        int d = (g1.i == g2.i ? 1 : 0) - (g1.i == g2.i + 1 ? 1 : 0);
        int sign = g2.fam == Fam::QE ? 1 : -1;
        return vpow(sign * d * g1.inv) * swap();
    }
    if (g1.fam == g2.fam && (g1.fam == Fam::QE || g1.fam == Fam::QF)) {
        int di = g1.i - g2.i;
        if (di >= 2 || di <= -2) return swap();
        return std::nullopt;  // adjacent Serre pairs are not straightened
    }
    return std::nullopt;
}

// ---- exact division by univariate deformation polynomials -------------------

// Divide f by a univariate Laurent polynomial in v. Polynomial division is
// tried first; otherwise den must divide a product of unit atoms (1 - v^N)
// times a monomial, which covers every structure constant arising here.
RatFun div_by_v_poly(RatFun f, const Poly& den, int v) {
    if (den.is_zero()) throw std::domain_error("div_by_v_poly: zero denominator");
    if (auto q = f.num().try_divide(den)) return RatFun(std::move(*q), f.den());
    Poly rem = den;
    RatFun out = f;
    int guard = 0;
    while (rem.term_count() > 1) {
        if (++guard > 16)
            throw std::domain_error("div_by_v_poly: denominator not cyclotomic: " + den.str());
        bool hit = false;
        const auto& reg = rem.registry();
        for (int N = 1; N <= 64 && !hit; ++N) {
            Poly unit = Poly::constant(reg, 1) - Poly::var(reg, v, N);
            if (auto q = unit.try_divide(rem)) {
                // 1/rem = q / (1 - v^N)
                out.mul_poly(*q);
                out.div_poly(unit);
                rem = Poly::constant(reg, 1);
                hit = true;
            }
        }
        if (!hit) {
            // strip one unit-atom factor if possible
            for (int N = 1; N <= 64 && !hit; ++N) {
                Poly unit = Poly::constant(reg, 1) - Poly::var(reg, v, N);
                if (auto q = rem.try_divide(unit)) {
                    out.div_poly(unit);
                    rem = std::move(*q);
                    hit = true;
                }
            }
        }
        if (!hit)
            throw std::domain_error("div_by_v_poly: denominator not cyclotomic: " + den.str());
    }
    if (!rem.is_one()) {
        const auto& [m, c] = *rem.terms().begin();
        Mono neg(m.size());
        for (size_t k = 0; k < m.size(); ++k) neg[k] = -m[k];
        out = RatFun(out.num().mul_monomial(neg, Rat(1) / c), out.den());
    }
    return out;
}

// Relation-driven straightening for the finite and affine RTT algebras.
// Rules are obtained by solving, per index family and level line, the linear
// system of all extracted RTT relations for the out-of-order words.
class TrigEngine {
  public:
    explicit TrigEngine(Algebra A) : A_(std::move(A)) {}

    std::optional<NCPoly> operator()(const GenSym& g1, const GenSym& g2) {
        const auto& d = *A_.desc;
        if (g1.fam == Fam::TRoot && g2.fam == Fam::TRoot && g1.inv != g2.inv) return A_.one();
        if (g1.fam == Fam::TTrig && g2.fam == Fam::TTrig && g1.i == g1.j && g2.i == g2.j &&
            g1.i == g2.i && g1.r == 0 && g2.r == 0 && g1.sector != g2.sector)
            return A_.one();
        if (ord_key(d, g1) <= ord_key(d, g2)) return std::nullopt;
        if (g1.fam == Fam::TRoot || g2.fam == Fam::TRoot)
            return NCPoly::word(A_.desc, {g2, g1}, RatFun::one(d.reg));
        // Same-entry same-sector modes commute: the diagonal relation telescopes.
        if (g1.i == g2.i && g1.j == g2.j && g1.sector == g2.sector)
            return NCPoly::word(A_.desc, {g2, g1}, RatFun::one(d.reg));
        Word target{g1, g2};
        auto it = solved_.find(target);
        if (it != solved_.end()) return it->second;
        solve_family(g1, g2);
        it = solved_.find(target);
        if (it == solved_.end())
            throw std::logic_error("straightening system left " + word_str(target) +
                                   " unsolved");
        return it->second;
    }

  private:
    void solve_family(const GenSym& g1, const GenSym& g2);
    Algebra A_;
    std::map<Word, NCPoly, WordLess> solved_;
};

void TrigEngine::solve_family(const GenSym& g1, const GenSym& g2) {
    const auto& d = *A_.desc;
    const int e1 = g1.sector, e2 = g2.sector;
    const bool affine = d.kind == AlgebraDescriptor::Kind::RttAffine;
    const int Lam = g1.r + g2.r;  // signed level sum, constant along relations

    // Level splits of the block. Equal sectors: the whole finite line.
    // Mixed sectors: only the (g1.r, g2.r) block; other levels have smaller
    // |r|-sum and are handled recursively by the rewrite engine.
    std::vector<std::pair<int, int>> splits;
    if (!affine) {
        splits = {{0, 0}};
    } else if (e1 == e2) {
        if (e1 > 0)
            for (int m = 0; m <= Lam; ++m) splits.emplace_back(m, Lam - m);
        else
            for (int m = 0; m >= Lam; --m) splits.emplace_back(m, Lam - m);
    } else {
        splits = {{g1.r, g2.r}};
    }

    auto valid = [&](int sector, int i, int j, int m) {
        if (sector > 0 && m < 0) return false;
        if (sector < 0 && m > 0) return false;
        if (!affine && m != 0) return false;
        if (m == 0 && ((sector > 0 && i > j) || (sector < 0 && i < j))) return false;
        return true;
    };

    // Collect the word family.
    std::vector<Word> words;
    auto add_word = [&](const Word& w) {
        if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
    };
    const int a = g1.i, c = g2.i, b = g1.j, dd = g2.j;
    std::vector<std::pair<int, int>> rowp{{a, c}}, colp{{b, dd}};
    if (c != a) rowp.push_back({c, a});
    if (dd != b) colp.push_back({dd, b});
    for (auto [r1, r2] : rowp)
        for (auto [c1, c2] : colp)
            for (auto [m1, m2] : splits) {
                if (valid(e1, r1, c1, m1) && valid(e2, r2, c2, m2)) {
                    add_word({t_trig(e1, r1, c1, m1), t_trig(e2, r2, c2, m2)});
                    add_word({t_trig(e2, r2, c2, m2), t_trig(e1, r1, c1, m1)});
                }
            }

    // Collect relations whose support lies in the family (plus lower blocks
    // for mixed sectors, which become right-hand knowns).
    struct Eq {
        std::map<size_t, Poly> in_family;  // word index -> coefficient
        NCPoly rest;                       // known words (lower level blocks)
    };
    std::vector<Eq> eqs;
    auto widx = [&](const Word& w) -> std::optional<size_t> {
        auto itw = std::find(words.begin(), words.end(), w);
        if (itw == words.end()) return std::nullopt;
        return static_cast<size_t>(itw - words.begin());
    };
    const long block_abs = std::abs(g1.r) + std::abs(g2.r);
    auto word_abs = [](const Word& w) {
        long s = 0;
        for (const auto& g : w) s += g.r < 0 ? -g.r : g.r;
        return s;
    };
    int plo = -std::abs(Lam) - 2, phi = std::abs(Lam) + 2;
    if (!affine) plo = phi = 0;
    for (auto [r1, r2] : rowp)
        for (auto [c1, c2] : colp)
            for (int p = plo; p <= phi; ++p) {
                int q = (affine ? 1 : 0) - Lam - p;
                NCPoly rel = rtt_relation(A_, e1, e2, r1, r2, c1, c2, p, q);
                if (rel.is_zero()) continue;
                Eq eq;
                eq.rest = A_.zero();
                bool touches = false, ok = true;
                for (const auto& [w, cf] : rel.terms()) {
                    auto ix = widx(w);
                    if (ix) {
                        if (!cf.is_polynomial())
                            throw std::logic_error("relation coefficient not polynomial");
                        eq.in_family[*ix] = cf.num();
                        touches = true;
                    } else {
                        // out-of-family words must sit strictly below the block,
                        // so the rewrite recursion has somewhere to go
                        if (word_abs(w) >= block_abs && e1 != e2) ok = false;
                        eq.rest.add_term(w, cf);
                    }
                }
                if (touches && ok) eqs.push_back(std::move(eq));
            }

    // Unknowns: out-of-order words of the family.
    std::vector<size_t> unknowns;
    for (size_t k = 0; k < words.size(); ++k)
        if (ord_key(d, words[k][1]) < ord_key(d, words[k][0])) unknowns.push_back(k);
    if (unknowns.empty()) return;

    // Fraction-free Gaussian elimination on [A | knowns], A over Z[v,v^{-1}].
    const size_t nu = unknowns.size();
    struct Row {
        std::vector<Poly> A;
        NCPoly rhs;  // minus the known part
    };
    std::vector<Row> rows;
    for (auto& eq : eqs) {
        Row row;
        row.A.assign(nu, Poly(d.reg));
        bool nontrivial = false;
        NCPoly rhs = -eq.rest;
        for (auto& [ix, cf] : eq.in_family) {
            auto itu = std::find(unknowns.begin(), unknowns.end(), ix);
            if (itu != unknowns.end()) {
                row.A[static_cast<size_t>(itu - unknowns.begin())] = cf;
                if (!cf.is_zero()) nontrivial = true;
            } else {
                rhs.add_term(words[ix], RatFun(-cf));
            }
        }
        row.rhs = std::move(rhs);
        if (nontrivial) rows.push_back(std::move(row));
    }

    // Forward elimination with column pivoting (prefer monomial pivots).
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < nu && rank < rows.size(); ++col) {
        size_t best = rows.size();
        for (size_t r = rank; r < rows.size(); ++r) {
            if (rows[r].A[col].is_zero()) continue;
            if (best == rows.size() ||
                rows[r].A[col].term_count() < rows[best].A[col].term_count())
                best = r;
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r].A[col].is_zero()) continue;
            Poly f = rows[r].A[col], g = rows[rank].A[col];
            for (size_t cc = 0; cc < nu; ++cc)
                rows[r].A[cc] = rows[r].A[cc] * g - rows[rank].A[cc] * f;
            NCPoly nr = rows[r].rhs;
            nr.mul_poly(g);
            NCPoly sub = rows[rank].rhs;
            sub.mul_poly(f);
            rows[r].rhs = nr - sub;
        }
        pivot_col.push_back(col);
        ++rank;
    }

    const int v = d.deformation;
    for (size_t r = 0; r < rank; ++r) {
        size_t col = pivot_col[r];
        const Poly& piv = rows[r].A[col];
        for (size_t cc = 0; cc < nu; ++cc)
            if (cc != col && !rows[r].A[cc].is_zero())
                throw std::logic_error("straightening system not fully reduced");
        NCPoly sol = A_.zero();
        for (const auto& [w, cf] : rows[r].rhs.terms())
            sol.add_term(w, div_by_v_poly(cf, piv, v));
        solved_[words[unknowns[col]]] = std::move(sol);
    }
}

std::optional<NCPoly> trig_rule(const std::shared_ptr<TrigEngine>& eng, const GenSym& g1,
                                const GenSym& g2) {
    return (*eng)(g1, g2);
}

}  // namespace

Algebra make_rtt_rational(int n, int nframing) {
    auto desc =
        make_descriptor(AlgebraDescriptor::Kind::RttRational, n, fresh_registry("hbar", nframing));
    Algebra A;
    A.desc = desc;
    A.rs = RewriteSystem(desc, [A](const GenSym& a, const GenSym& b) {
        return rational_rule(A, a, b);
    });
    return A;
}

Algebra make_env_gl(int n, int nframing) {
    auto desc =
        make_descriptor(AlgebraDescriptor::Kind::EnvGl, n, fresh_registry("hbar", nframing));
    Algebra A;
    A.desc = desc;
    A.rs = RewriteSystem(desc,
                         [A](const GenSym& a, const GenSym& b) { return envgl_rule(A, a, b); });
    return A;
}

Algebra make_qenv_gl(int n, int nframing, bool enhanced) {
    auto desc = make_descriptor(AlgebraDescriptor::Kind::QEnvGl, n,
                                fresh_registry("v", nframing), {}, enhanced);
    Algebra A;
    A.desc = desc;
    A.rs = RewriteSystem(desc,
                         [A](const GenSym& a, const GenSym& b) { return qenv_rule(A, a, b); });
    return A;
}

Algebra make_rtt_finite(int n, int nframing, bool enhanced) {
    auto desc = make_descriptor(AlgebraDescriptor::Kind::RttFinite, n,
                                fresh_registry("v", nframing), {}, enhanced);
    Algebra A;
    A.desc = desc;
    auto eng = std::make_shared<TrigEngine>(A);
    A.rs = RewriteSystem(desc,
                         [eng](const GenSym& a, const GenSym& b) { return trig_rule(eng, a, b); });
    return A;
}

Algebra make_rtt_affine(int n, int nframing, bool enhanced) {
    auto desc = make_descriptor(AlgebraDescriptor::Kind::RttAffine, n,
                                fresh_registry("v", nframing), {}, enhanced);
    Algebra A;
    A.desc = desc;
    auto eng = std::make_shared<TrigEngine>(A);
    A.rs = RewriteSystem(desc,
                         [eng](const GenSym& a, const GenSym& b) { return trig_rule(eng, a, b); });
    return A;
}

std::string check_rational_rtt_paths(int n, int maxlevel) {
    Algebra A = make_rtt_rational(n);
    Poly h = A.deform();
    auto CF = [&](int r, int s, int i, int j, int k, int l) {
        // closed commutator rule (zero when r or s is 0 after folding).
        NCPoly out = A.zero();
        if (r >= 1 && s >= 1) {
            out += A.gen(t_rat(i, j, r)) * A.gen(t_rat(k, l, s));
            out -= A.gen(t_rat(k, l, s)) * A.gen(t_rat(i, j, r));
            for (int aa = 1; aa <= std::min(r, s); ++aa) {
                int hi = r + s - aa;
                if (aa == 1) {
                    if (k == j) out -= A.gen(t_rat(i, l, hi));
                    if (i == l) out += A.gen(t_rat(k, j, hi));
                } else {
                    out -= (A.gen(t_rat(k, j, aa - 1)) * A.gen(t_rat(i, l, hi))).mul_poly(h);
                    out += (A.gen(t_rat(k, j, hi)) * A.gen(t_rat(i, l, aa - 1))).mul_poly(h);
                }
            }
        }
        return out;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    for (int r = 0; r < maxlevel; ++r)
                        for (int s = 0; s < maxlevel; ++s) {
                            // extracted relation at bidegree (-r,-s) equals
                            // hbar^2 (CF(r+1,s) - CF(r,s+1)) verbatim.
                            NCPoly rel = rtt_relation(A, 0, 0, i, k, j, l, -r, -s);
                            NCPoly cf = CF(r + 1, s, i, j, k, l) - CF(r, s + 1, i, j, k, l);
                            cf.mul_poly(h * h);
                            if (rel != cf) {
                                std::ostringstream os;
                                os << "path mismatch at (i,j,k,l,r,s)=(" << i << "," << j << ","
                                   << k << "," << l << "," << r << "," << s << ")";
                                return os.str();
                            }
                        }
    return "";
}

std::string check_relations_reduce(const Algebra& A, int L, long budget) {
    int n = A.desc->n;
    bool rational = A.desc->kind == AlgebraDescriptor::Kind::RttRational;
    bool finite = A.desc->kind == AlgebraDescriptor::Kind::RttFinite;
    std::vector<std::pair<int, int>> sectors;
    if (rational)
        sectors = {{0, 0}};
    else
        sectors = {{1, 1}, {-1, -1}, {-1, 1}, {1, -1}};
    for (auto [e1, e2] : sectors)
        for (int a = 1; a <= n; ++a)
            for (int c = 1; c <= n; ++c)
                for (int b = 1; b <= n; ++b)
                    for (int d = 1; d <= n; ++d) {
                        int plo = finite ? 0 : -L, phi = finite ? 0 : L;
                        for (int p = plo; p <= phi; ++p)
                            for (int q = plo; q <= phi; ++q) {
                                NCPoly rel = rtt_relation(A, e1, e2, a, c, b, d, p, q);
                                NCPoly nf = A.nf(rel, budget);
                                if (!nf.is_zero()) {
                                    std::ostringstream os;
                                    os << "relation residue at sector (" << e1 << "," << e2
                                       << ") entry (" << a << c << "|" << b << d << ") bidegree ("
                                       << p << "," << q << "): " << nf.str();
                                    return os.str();
                                }
                            }
                    }
    return "";
}

}  // namespace qloop
