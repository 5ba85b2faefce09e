#include "qloop/gensym.hpp"

#include <sstream>

namespace qloop {

std::string gensym_str(const GenSym& g) {
    std::ostringstream os;
    auto lvl = [&](char open = '[') {
        (void)open;
    };
    (void)lvl;
    switch (g.fam) {
        case Fam::TRat: os << "t[" << g.i << "," << g.j << ";" << g.r << "]"; break;
        case Fam::TTrig:
            os << "t" << (g.sector > 0 ? "+" : "-") << "[" << g.i << "," << g.j << ";" << g.r
               << "]";
            break;
        case Fam::Egl: os << "E[" << g.i << "," << g.j << "]"; break;
        case Fam::QE: os << "E[" << g.i << "]"; break;
        case Fam::QF: os << "F[" << g.i << "]"; break;
        case Fam::QT: os << "t[" << g.i << "]"; break;
        case Fam::Ye: os << "e[" << g.i << ";" << g.r << "]"; break;
        case Fam::Yf: os << "f[" << g.i << ";" << g.r << "]"; break;
        case Fam::Yzeta: os << "zeta[" << g.i << ";" << g.r << "]"; break;
        case Fam::SYE: os << "E[" << g.i << ";" << g.r << "]"; break;
        case Fam::SYF: os << "F[" << g.i << ";" << g.r << "]"; break;
        case Fam::SYH: os << "H[" << g.i << ";" << g.r << "]"; break;
        case Fam::Le: os << "e[" << g.i << ";" << g.r << "]"; break;
        case Fam::Lf: os << "f[" << g.i << ";" << g.r << "]"; break;
        case Fam::Lphi:
            os << "varphi" << (g.sector > 0 ? "+" : "-") << "[" << g.i << ";" << g.r << "]";
            break;
        case Fam::Lpsi:
            os << "psi" << (g.sector > 0 ? "+" : "-") << "[" << g.i << ";" << g.r << "]";
            break;
        case Fam::PhiAd: os << "phi" << (g.sector > 0 ? "+" : "-") << "[" << g.i << "]"; break;
        case Fam::TRoot: os << "troot"; break;
    }
    if (g.inv < 0) os << "^-1";
    return os.str();
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) os << "*";
        os << gensym_str(w[k]);
    }
    return os.str();
}

bool AlgebraDescriptor::legal(const GenSym& g) const {
    auto in_rank = [&](int x, int hi) { return 1 <= x && x <= hi; };
    switch (kind) {
        case Kind::RttRational:
            return g.fam == Fam::TRat && in_rank(g.i, n) && in_rank(g.j, n) && g.r >= 1;
        case Kind::RttFinite:
            if (g.fam == Fam::TRoot) return enhanced;
            if (g.fam != Fam::TTrig || g.r != 0) return false;
            if (!in_rank(g.i, n) || !in_rank(g.j, n)) return false;
            return g.sector > 0 ? g.i <= g.j : g.i >= g.j;
        case Kind::RttAffine:
            if (g.fam == Fam::TRoot) return enhanced;
            if (g.fam != Fam::TTrig) return false;
            if (!in_rank(g.i, n) || !in_rank(g.j, n)) return false;
            if (g.sector > 0) return g.r > 0 || (g.r == 0 && g.i <= g.j);
            return g.r < 0 || (g.r == 0 && g.i >= g.j);
        case Kind::EnvGl:
            return g.fam == Fam::Egl && in_rank(g.i, n) && in_rank(g.j, n);
        case Kind::QEnvGl:
            if (g.fam == Fam::TRoot) return enhanced;
            if (g.fam == Fam::QE || g.fam == Fam::QF) return in_rank(g.i, n - 1);
            if (g.fam == Fam::QT) return in_rank(g.i, n);
            return false;
        case Kind::YangianDr:
            if (g.fam == Fam::Ye || g.fam == Fam::Yf) return in_rank(g.i, n - 1) && g.r >= 0;
            if (g.fam == Fam::Yzeta) return in_rank(g.i, n) && g.r >= 0;
            return false;
        case Kind::LoopDr:
            if (g.fam == Fam::Le || g.fam == Fam::Lf) return in_rank(g.i, n - 1);
            if (g.fam == Fam::Lphi)
                return in_rank(g.i, n) && (g.sector > 0 ? g.r >= 0 : g.r <= 0) &&
                       (g.inv > 0 || g.r == 0);
            return false;
        case Kind::ShiftedYangian: {
            if (g.fam == Fam::SYE || g.fam == Fam::SYF) return in_rank(g.i, n - 1) && g.r >= 1;
            if (g.fam == Fam::SYH) {
                if (!in_rank(g.i, n - 1)) return false;
                int b = mu_b.empty() ? 0 : mu_b[static_cast<size_t>(g.i - 1)];
                return g.r > -b;
            }
            return false;
        }
        case Kind::ShiftedLoop: {
            if (g.fam == Fam::Le || g.fam == Fam::Lf) return in_rank(g.i, n - 1);
            if (g.fam == Fam::PhiAd) return in_rank(g.i, n - 1);
            if (g.fam == Fam::Lpsi) {
                if (!in_rank(g.i, n - 1)) return false;
                int b = mu_b.empty() ? 0 : mu_b[static_cast<size_t>(g.i - 1)];
                if (g.sector > 0) return g.r >= 0 && (g.inv > 0 || g.r == 0);
                return g.r <= b && (g.inv > 0 || g.r == b);
            }
            return false;
        }
    }
    return false;
}

DescPtr make_descriptor(AlgebraDescriptor::Kind kind, int n, RegistryPtr reg,
                        std::vector<int> mu_b, bool enhanced) {
    auto d = std::make_shared<AlgebraDescriptor>();
    d->kind = kind;
    d->n = n;
    d->reg = std::move(reg);
    d->deformation = -1;
    for (int k = 0; k < d->reg->size(); ++k)
        if (d->reg->kind(k) == VarKind::Deformation) d->deformation = k;
    if (d->deformation < 0)
        throw std::invalid_argument("descriptor registry lacks a deformation variable");
    d->mu_b = std::move(mu_b);
    d->enhanced = enhanced;
    return d;
}

}  // namespace qloop
