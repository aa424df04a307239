#include "eqlv/howell.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqlv {

namespace {

long val_p(long x, long p, long n) {
    if (x == 0) return n;
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

HowellForm::HowellForm(std::vector<std::vector<long>> rows, long p, long n) : p_(p), n_(n) {
    pn_ = 1;
    for (long i = 0; i < n; ++i) pn_ *= p;
    size_t w = 0;
    for (auto& r : rows) {
        w = std::max(w, r.size());
        for (auto& x : r) x = ((x % pn_) + pn_) % pn_;
    }
    for (auto& r : rows) r.resize(w, 0);

    std::vector<std::vector<long>> pivots;
    std::vector<int> pcols;
    std::vector<long> pvals;

    for (size_t col = 0; col < w; ++col) {
        // candidate with minimal valuation at this column
        int best = -1;
        long bestv = n_ + 1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            long v = val_p(rows[i][col], p_, n_);
            if (v < bestv) {
                bestv = v;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) continue;

        std::vector<long> piv = rows[best];
        rows.erase(rows.begin() + best);
        long pv = 1;
        for (long i = 0; i < bestv; ++i) pv *= p_;
        long unit = piv[col] / pv;
        long uinv = inv_mod_l(unit, pn_);
        for (auto& x : piv) x = (x * uinv) % pn_;

        for (auto& r : rows) {
            if (r[col] == 0) continue;
            long q = r[col] / pv;  // valuation >= bestv by minimality
            for (size_t t = col; t < w; ++t) r[t] = ((r[t] - q * piv[t]) % pn_ + pn_) % pn_;
        }
        // annihilator of the pivot contributes relations in later columns
        if (bestv > 0) {
            long ann = pn_ / pv;
            std::vector<long> arow(w, 0);
            for (size_t t = col; t < w; ++t) arow[t] = (piv[t] * ann) % pn_;
            bool nz = false;
            for (long x : arow) nz = nz || x != 0;
            if (nz) rows.push_back(std::move(arow));
        }
        pivots.push_back(std::move(piv));
        pcols.push_back(static_cast<int>(col));
        pvals.push_back(pv);
    }

    // reduce entries above each pivot mod p^v
    for (size_t i = 0; i < pivots.size(); ++i) {
        for (size_t q = 0; q < i; ++q) {
            long e = pivots[q][pcols[i]];
            long quot = e / pvals[i];
            if (quot == 0) continue;
            for (size_t t = pcols[i]; t < w; ++t)
                pivots[q][t] = ((pivots[q][t] - quot * pivots[i][t]) % pn_ + pn_) % pn_;
        }
    }

    rows_ = std::move(pivots);
    pivot_col_ = std::move(pcols);
    pivot_val_ = std::move(pvals);
}

bool HowellForm::contains(std::vector<long> v) const {
    size_t w = rows_.empty() ? v.size() : rows_[0].size();
    v.resize(std::max(w, v.size()), 0);
    if (!rows_.empty() && v.size() > w) {
        for (size_t t = w; t < v.size(); ++t)
            if (v[t] % pn_ != 0) return false;
        v.resize(w);
    }
    for (auto& x : v) x = ((x % pn_) + pn_) % pn_;
    for (size_t i = 0; i < rows_.size(); ++i) {
        long e = v[pivot_col_[i]];
        if (e == 0) continue;
        if (e % pivot_val_[i] != 0) return false;
        long q = e / pivot_val_[i];
        for (size_t t = pivot_col_[i]; t < v.size(); ++t)
            v[t] = ((v[t] - q * rows_[i][t]) % pn_ + pn_) % pn_;
    }
    for (long x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace eqlv
