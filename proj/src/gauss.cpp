#include "qloop/gauss.hpp"

#include <sstream>

namespace qloop {

namespace {

using SMat = std::map<std::pair<int, int>, NCSeries>;

// Recursive LDU with Schur complements. offset converts block-local indices
// back to global ones; lead_inv(i) supplies the inverse of the leading
// coefficient of the i-th diagonal entry.
void ldu(const SMat& M, int lo, int n, const std::function<NCPoly(int)>& lead_inv,
         GaussModes& out) {
    const NCSeries& pivot = M.at({lo, lo});
    NCSeries pinv = pivot.inverse(lead_inv(lo));
    out.g.emplace(lo, pivot);
    for (int j = lo + 1; j <= n; ++j) {
        out.e.emplace(std::make_tuple(lo, j), pinv * M.at({lo, j}));
        out.f.emplace(std::make_tuple(j, lo), M.at({j, lo}) * pinv);
    }
    if (lo == n) return;
    SMat S;
    for (int i = lo + 1; i <= n; ++i)
        for (int j = lo + 1; j <= n; ++j)
            S.insert_or_assign({i, j}, M.at({i, j}) - M.at({i, lo}) * pinv * M.at({lo, j}));
    ldu(S, lo + 1, n, lead_inv, out);
}

}  // namespace

NCPoly GaussModes::e_mode(int i, int j, int r) const {
    const NCSeries& s = e.at({i, j});
    if (sector == 0) return s.at(r).div_deformation();
    return s.at(r < 0 ? -r : r);
}
NCPoly GaussModes::f_mode(int i, int j, int r) const {
    const NCSeries& s = f.at({i, j});
    if (sector == 0) return s.at(r).div_deformation();
    return s.at(r < 0 ? -r : r);
}
NCPoly GaussModes::g_mode(int i, int r) const {
    const NCSeries& s = g.at(i);
    if (sector == 0) return s.at(r).div_deformation();
    return s.at(r < 0 ? -r : r);
}

GaussModes gauss_rational(const Algebra& A, int L) {
    const int n = A.desc->n;
    SMat M;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) M.insert_or_assign({i, j}, t_series_rational(A, i, j, L));
    GaussModes out;
    out.n = n;
    out.L = L;
    out.sector = 0;
    ldu(M, 1, n, [&](int) { return A.one(); }, out);
    // normal-form all coefficients once
    auto nf = [&](const NCPoly& p) { return A.nf(p); };
    for (auto& [k, s] : out.e) s = s.mapped(nf);
    for (auto& [k, s] : out.f) s = s.mapped(nf);
    for (auto& [k, s] : out.g) s = s.mapped(nf);
    return out;
}

GaussModes gauss_trig(const Algebra& A, int sector, int L) {
    const int n = A.desc->n;
    SMat M;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) M.insert_or_assign({i, j}, t_series_trig(A, sector, i, j, L));
    GaussModes out;
    out.n = n;
    out.L = L;
    out.sector = sector;
    ldu(M, 1, n, [&](int i) { return A.gen(t_trig(-sector, i, i, 0)); }, out);
    auto nf = [&](const NCPoly& p) { return A.nf(p); };
    for (auto& [k, s] : out.e) s = s.mapped(nf);
    for (auto& [k, s] : out.f) s = s.mapped(nf);
    for (auto& [k, s] : out.g) s = s.mapped(nf);
    return out;
}

std::string check_gauss_recombine(const Algebra& A, const GaussModes& gm) {
    const int n = gm.n;
    auto one = [&](SeriesDir dir) {
        NCSeries s(dir, A.zero());
        s.set(0, A.one());
        return s;
    };
    SeriesDir dir = gm.sector < 0 ? SeriesDir::Z : SeriesDir::ZInv;
    auto entryF = [&](int i, int j) {
        if (i == j) return one(dir);
        if (i > j) return gm.f.at({i, j});
        return NCSeries(dir, A.zero());
    };
    auto entryE = [&](int i, int j) {
        if (i == j) return one(dir);
        if (i < j) return gm.e.at({i, j});
        return NCSeries(dir, A.zero());
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            NCSeries acc(dir, A.zero());
            for (int k = 1; k <= n; ++k) {
                if (k > i || k > j) continue;
                acc += entryF(i, k) * gm.g.at(k) * entryE(k, j);
            }
            NCSeries t = gm.sector == 0 ? t_series_rational(A, i, j, gm.L)
                                        : t_series_trig(A, gm.sector, i, j, gm.L);
            NCSeries diff = acc - t;
            for (const auto& [r, c] : diff.coeffs()) {
                NCPoly res = A.nf(c);
                if (!res.is_zero()) {
                    std::ostringstream os;
                    os << "recombination fails at entry (" << i << "," << j << "), order " << r
                       << ": " << res.str();
                    return os.str();
                }
            }
        }
    return "";
}

}  // namespace qloop
