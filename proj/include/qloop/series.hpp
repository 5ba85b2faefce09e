#pragma once

#include <climits>
#include <functional>
#include <map>
#include <stdexcept>

#include "qloop/poly.hpp"

namespace qloop {

// Expansion direction of a truncated series: powers of z^{-1} or of z.
enum class SeriesDir { ZInv, Z };

// Truncated series over an arbitrary (possibly noncommutative) ring R.
// Writing zeta = z^{-1} (resp. z), the series is sum c_k zeta^k with
// coefficients exact for lo <= k <= hi, exactly zero for k < lo, and unknown
// beyond hi. hi == kExact marks a series known to all orders (a polynomial).
// Arithmetic never claims precision beyond the provable window.
//
// R must provide: copy, +=, *, is_zero(), and scale(Rat).
template <class R>
class Series {
  public:
    static constexpr int kExact = INT_MAX / 4;

    Series(SeriesDir dir, R zero, int lo = 0, int hi = kExact)
        : dir_(dir), zero_(std::move(zero)), lo_(lo), hi_(hi) {
        if (!zero_.is_zero()) throw std::invalid_argument("Series: zero prototype not zero");
    }

    SeriesDir dir() const { return dir_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const R& zero_proto() const { return zero_; }
    const std::map<int, R>& coeffs() const { return c_; }

    // Exact coefficient of zeta^k; throws outside the known window.
    const R& at(int k) const {
        if (k > hi_) throw std::domain_error("Series::at: beyond truncation order");
        auto it = c_.find(k);
        return it == c_.end() ? zero_ : it->second;
    }
    bool known(int k) const { return k <= hi_; }

    void set(int k, R v) {
        if (k < lo_) lo_ = k;
        if (v.is_zero())
            c_.erase(k);
        else
            c_.insert_or_assign(k, std::move(v));
    }
    void add(int k, const R& v) {
        if (v.is_zero()) return;
        if (k > hi_) return;  // beyond window: unknowable, drop
        if (k < lo_) lo_ = k;
        auto it = c_.find(k);
        if (it == c_.end())
            c_.emplace(k, v);
        else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    Series truncated(int new_hi) const {
        Series r(dir_, zero_, lo_, std::min(hi_, new_hi));
        for (const auto& [k, v] : c_)
            if (k <= r.hi_) r.c_.emplace(k, v);
        return r;
    }

    bool is_zero() const { return c_.empty(); }

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }

    friend Series operator+(const Series& a, const Series& b) {
        a.check_dir(b);
        Series r(a.dir_, a.zero_, std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
        for (const auto& [k, v] : a.c_) r.add(k, v);
        for (const auto& [k, v] : b.c_) r.add(k, v);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        a.check_dir(b);
        Series r(a.dir_, a.zero_, std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
        for (const auto& [k, v] : a.c_) r.add(k, v);
        for (const auto& [k, v] : b.c_) {
            R nv = v;
            nv.scale(Rat(-1));
            r.add(k, nv);
        }
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        a.check_dir(b);
        if ((a.c_.empty() && a.hi_ == kExact) || (b.c_.empty() && b.hi_ == kExact))
            return Series(a.dir_, a.zero_, 0, kExact);
        int hi = std::min(sat_add(a.hi_, b.lo_), sat_add(b.hi_, a.lo_));
        Series r(a.dir_, a.zero_, sat_add(a.lo_, b.lo_), hi);
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_) {
                if (ka + kb > r.hi_) continue;
                r.add(ka + kb, va * vb);
            }
        return r;
    }

    Series& scale(const Rat& x) {
        if (x == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [k, v] : c_) v.scale(x);
        return *this;
    }
    // Multiply every coefficient by a central ring element on the left.
    Series coeff_mul(const R& x) const {
        Series r(dir_, zero_, lo_, hi_);
        for (const auto& [k, v] : c_) r.add(k, x * v);
        return r;
    }

    // Multiply by zeta^s.
    Series shifted(int s) const {
        Series r(dir_, zero_, sat_add(lo_, s), sat_add(hi_, s));
        for (const auto& [k, v] : c_) r.c_.emplace(k + s, v);
        return r;
    }

    // Multiplicative inverse. lead_inv must be a two-sided inverse of the
    // lowest coefficient. The lowest coefficient must sit at lo() exactly.
    Series inverse(const R& lead_inv) const {
        if (c_.empty()) throw std::domain_error("Series::inverse: zero series");
        int lo = c_.begin()->first;
        const R& lead = c_.begin()->second;
        // S = lead (1 + T) zeta^lo, T = sum_{k>=1} lead_inv c_{lo+k} zeta^k.
        int width = hi_ == kExact ? kExact : hi_ - lo;
        Series T(dir_, zero_, 0, width);
        for (const auto& [k, v] : c_) {
            if (k == lo) continue;
            T.add(k - lo, lead_inv * v);
        }
        Series acc(dir_, zero_, 0, width);  // sum (-T)^j
        acc.add(0, one_like(lead, lead_inv));
        if (!T.c_.empty() && width > 0 && width != kExact) {
            Series pw = T;
            pw.scale(Rat(-1));
            Series term = pw;
            for (int j = 1; j <= width; ++j) {
                acc = acc + term;
                if (j < width) term = term * pw;
            }
        } else if (!T.c_.empty() && width == kExact) {
            throw std::domain_error("Series::inverse: exact inverse of a non-monomial series");
        }
        Series r(dir_, zero_, -lo, width == kExact ? kExact : width - lo);
        for (const auto& [k, v] : acc.c_) r.add(k - lo, v * lead_inv);
        return r;
    }

    // Map coefficients through f (e.g. a normal form); windows preserved.
    Series mapped(const std::function<R(const R&)>& f) const {
        Series r(dir_, zero_, lo_, hi_);
        for (const auto& [k, v] : c_) r.add(k, f(v));
        return r;
    }

    // Substitute z -> c*z (monomial rescaling): coefficient of zeta^k picks c^{-k}
    // (dir ZInv) resp. c^{k} (dir Z); the scalar action is provided by caller as
    // pow(k) giving the central element c^k as an R-multiplier.
    Series subst_scale(const std::function<R(int)>& pow_of_scale) const {
        Series r(dir_, zero_, lo_, hi_);
        int sign = dir_ == SeriesDir::ZInv ? -1 : 1;
        for (const auto& [k, v] : c_) r.add(k, pow_of_scale(sign * k) * v);
        return r;
    }

    // Substitute z -> z + step for a central scalar `step` (dir ZInv):
    // (z+s)^{-r} = sum_k binom(r+k-1,k)(-s)^k z^{-r-k}; positive powers expand
    // by plain binomials. The window shrinks to what is provably exact.
    Series subst_shift(const R& step) const {
        if (dir_ != SeriesDir::ZInv)
            throw std::domain_error("Series::subst_shift: only for z^{-1} direction");
        Series r(dir_, zero_, lo_, hi_);
        for (const auto& [k, v] : c_) {
            if (k >= 0) {
                // z^{-k}, k >= 0: (z+s)^{-k} = sum_{m>=0} binom(k+m-1,m)(-1)^m s^m z^{-k-m}
                r.add(k, v);
                if (k == 0) continue;
                R cur = v;
                Rat binom(1);
                for (int m = 1; k + m <= r.hi_; ++m) {
                    binom *= (k + m - 1);
                    binom /= m;
                    cur = step * cur;
                    R t = cur;
                    Rat c = binom * ((m % 2) ? -1 : 1);
                    t.scale(c);
                    r.add(k + m, t);
                }
            } else {
                // z^{|k|}: finite binomial expansion.
                int e = -k;
                R cur = v;
                Rat binom(1);
                r.add(k, v);
                for (int m = 1; m <= e; ++m) {
                    binom *= (e - m + 1);
                    binom /= m;
                    cur = step * cur;
                    R t = cur;
                    t.scale(binom);
                    r.add(k + m, t);
                }
            }
        }
        return r;
    }

  private:
    static int sat_add(int a, int b) {
        if (a >= kExact || b >= kExact) return kExact;
        return a + b;
    }
    static R one_like(const R& sample, const R& inv_of_lead) {
        // one = lead * lead_inv; caller guarantees two-sidedness.
        return sample * inv_of_lead;
    }
    void check_dir(const Series& o) const {
        if (dir_ != o.dir_) throw std::invalid_argument("Series: direction mismatch");
    }
    SeriesDir dir_;
    R zero_;
    int lo_, hi_;
    std::map<int, R> c_;
};

}  // namespace qloop
