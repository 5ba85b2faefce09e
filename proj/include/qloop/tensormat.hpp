#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qloop/ratfun.hpp"

namespace qloop {

// Multi-index into (C^n)^{tensor k}: one 1-based index per tensor factor.
using TIdx = std::vector<uint8_t>;

// Sparse matrix acting on (C^n)^{tensor k} with entries in a ring T
// (commutative coefficients or NCPoly/series values).
template <class T>
class TensorMat {
  public:
    TensorMat(int n, int k, T zero) : n_(n), k_(k), zero_(std::move(zero)) {}

    static TensorMat identity(int n, int k, const T& zero, const T& one) {
        TensorMat m(n, k, zero);
        TIdx idx(static_cast<size_t>(k), 1);
        while (true) {
            m.set(idx, idx, one);
            if (!next(idx, n)) break;
        }
        return m;
    }

    int n() const { return n_; }
    int factors() const { return k_; }
    const T& zero_proto() const { return zero_; }

    const T& at(const TIdx& row, const TIdx& col) const {
        auto it = e_.find({row, col});
        return it == e_.end() ? zero_ : it->second;
    }
    void set(const TIdx& row, const TIdx& col, T v) {
        if (v.is_zero())
            e_.erase({row, col});
        else
            e_.insert_or_assign({row, col}, std::move(v));
    }
    void add(const TIdx& row, const TIdx& col, const T& v) {
        if (v.is_zero()) return;
        auto it = e_.find({row, col});
        if (it == e_.end())
            e_.emplace(std::make_pair(row, col), v);
        else {
            it->second += v;
            if (it->second.is_zero()) e_.erase(it);
        }
    }
    const std::map<std::pair<TIdx, TIdx>, T>& entries() const { return e_; }

    bool is_zero() const { return e_.empty(); }

    friend TensorMat operator+(TensorMat a, const TensorMat& b) {
        for (const auto& [rc, v] : b.e_) a.add(rc.first, rc.second, v);
        return a;
    }
    friend TensorMat operator-(TensorMat a, const TensorMat& b) {
        for (const auto& [rc, v] : b.e_) {
            T nv = v;
            nv.scale(Rat(-1));
            a.add(rc.first, rc.second, nv);
        }
        return a;
    }
    friend TensorMat operator*(const TensorMat& a, const TensorMat& b) {
        TensorMat r(a.n_, a.k_, a.zero_);
        // group b's entries by row
        std::map<TIdx, std::vector<const std::pair<const std::pair<TIdx, TIdx>, T>*>> by_row;
        for (const auto& ent : b.e_) by_row[ent.first.first].push_back(&ent);
        for (const auto& [rc, va] : a.e_) {
            auto it = by_row.find(rc.second);
            if (it == by_row.end()) continue;
            for (const auto* ent : it->second) r.add(rc.first, ent->first.second, va * ent->second);
        }
        return r;
    }
    TensorMat& scale(const Rat& c) {
        if (c == 0) {
            e_.clear();
            return *this;
        }
        for (auto& [rc, v] : e_) v.scale(c);
        return *this;
    }
    TensorMat coeff_mul(const T& c) const {
        TensorMat r(n_, k_, zero_);
        for (const auto& [rc, v] : e_) r.add(rc.first, rc.second, c * v);
        return r;
    }

    // Embed a 2-factor matrix into factors (a, b) of a k-factor space, acting
    // as identity elsewhere. a != b, both 0-based.
    TensorMat<T> embed_pair(int k, int a, int b, const T& one) const;

    // Entrywise map (e.g. substitution or normal form).
    template <class F>
    TensorMat mapped(F&& f) const {
        TensorMat r(n_, k_, zero_);
        for (const auto& [rc, v] : e_) r.add(rc.first, rc.second, f(v));
        return r;
    }

    static bool next(TIdx& idx, int n) {
        for (size_t k = idx.size(); k-- > 0;) {
            if (idx[k] < n) {
                ++idx[k];
                std::fill(idx.begin() + static_cast<long>(k) + 1, idx.end(), uint8_t(1));
                return true;
            }
        }
        return false;
    }

  private:
    int n_, k_;
    T zero_;
    std::map<std::pair<TIdx, TIdx>, T> e_;
};

template <class T>
TensorMat<T> TensorMat<T>::embed_pair(int k, int a, int b, const T& one) const {
    TensorMat<T> r(n_, k, zero_);
    TIdx rest(static_cast<size_t>(k), 1);
    // iterate over the identity part
    std::vector<int> free_slots;
    for (int s = 0; s < k; ++s)
        if (s != a && s != b) free_slots.push_back(s);
    TIdx row(static_cast<size_t>(k)), col(static_cast<size_t>(k));
    TIdx fidx(free_slots.size(), 1);
    while (true) {
        for (const auto& [rc, v] : e_) {
            row.assign(static_cast<size_t>(k), 1);
            col.assign(static_cast<size_t>(k), 1);
            row[static_cast<size_t>(a)] = rc.first[0];
            row[static_cast<size_t>(b)] = rc.first[1];
            col[static_cast<size_t>(a)] = rc.second[0];
            col[static_cast<size_t>(b)] = rc.second[1];
            for (size_t s = 0; s < free_slots.size(); ++s) {
                row[static_cast<size_t>(free_slots[s])] = fidx[s];
                col[static_cast<size_t>(free_slots[s])] = fidx[s];
            }
            r.add(row, col, v);
        }
        if (free_slots.empty() || !next(fidx, n_)) break;
    }
    (void)rest;
    (void)one;
    return r;
}

}  // namespace qloop
