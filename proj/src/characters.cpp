#include "eqlv/characters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqlv {

DirichletCharacter::DirichletCharacter(GroupPtr g, long order, std::vector<int> exps)
    : g_(std::move(g)), order_(order), exps_(std::move(exps)) {}

CyclotomicNumber DirichletCharacter::value(long a) const {
    int idx = g_->index_of_label(modulus() == 1 ? 1 : ((a % modulus()) + modulus()) % modulus());
    if (idx < 0) throw std::domain_error("DirichletCharacter::value: not a unit");
    return value_at(idx);
}

CyclotomicNumber DirichletCharacter::value_at(int idx) const {
    return CyclotomicNumber::root(order_, exps_[idx]);
}

CyclotomicNumber DirichletCharacter::value_at_level(int idx, long m) const {
    if (m % order_ != 0) throw std::invalid_argument("value_at_level: order must divide level");
    return CyclotomicNumber::root(m, exps_[idx] * (m / order_));
}

std::complex<double> DirichletCharacter::cvalue(long a) const {
    long f = modulus();
    long lab = f == 1 ? 1 : ((a % f) + f) % f;
    int idx = g_->index_of_label(lab);
    if (idx < 0) return 0.0;
    double arg = 2.0 * std::numbers::pi * exps_[idx] / static_cast<double>(order_);
    return {std::cos(arg), std::sin(arg)};
}

bool DirichletCharacter::is_even() const {
    long f = modulus();
    if (f <= 2) return true;
    return exps_[g_->index_of_label(f - 1)] == 0;
}

long DirichletCharacter::conductor() const {
    long f = modulus();
    for (long d = 1; d <= f; ++d) {
        if (f % d != 0) continue;
        bool ok = true;
        for (int i = 0; i < g_->size() && ok; ++i)
            if (g_->label(i) % d == 1 % d && exps_[i] != 0) ok = false;
        if (ok) return d;
    }
    return f;
}

DirichletCharacter DirichletCharacter::primitive_core() const {
    long d = conductor(), f = modulus();
    GroupPtr gd = unit_group(d);
    std::vector<int> exps(gd->size(), 0);
    for (int i = 0; i < gd->size(); ++i) {
        long a = gd->label(i);
        // lift to b = a mod d with gcd(b, f) = 1
        long b = a;
        while (gcd_l(b, f) != 1) b += d;
        exps[i] = exps_[g_->index_of_label(f == 1 ? 1 : b % f)];
    }
    return DirichletCharacter(gd, order_, std::move(exps));
}

DirichletCharacter DirichletCharacter::inverse() const {
    std::vector<int> exps(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i)
        exps[i] = exps_[i] == 0 ? 0 : static_cast<int>(order_) - exps_[i];
    return DirichletCharacter(g_, order_, std::move(exps));
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
    return modulus() == o.modulus() && order_ == o.order_ && exps_ == o.exps_;
}

std::vector<DirichletCharacter> DirichletCharacter::all(const GroupPtr& g) {
    const auto& decomp = g->decomposition();
    int n = g->size();

    // Exponent vector of each element with respect to the generators.
    size_t t = decomp.size();
    std::vector<std::vector<long>> elt_exp(n);
    {
        std::vector<long> cnt(t, 0);
        // enumerate all products of generator powers
        long total = 1;
        for (auto [gi, d] : decomp) total *= d;
        if (total != n) throw std::logic_error("characters: generators do not span the group");
        for (long it = 0; it < total; ++it) {
            int x = g->identity();
            long rem = it;
            std::vector<long> vec(t);
            for (size_t i = 0; i < t; ++i) {
                long d = decomp[i].second;
                long e = rem % d;
                rem /= d;
                vec[i] = e;
                int gi = decomp[i].first;
                for (long k = 0; k < e; ++k) x = g->mul(x, gi);
            }
            elt_exp[x] = vec;
        }
    }

    long E = 1;
    for (auto [gi, d] : decomp) E = lcm_l(E, d);
    if (t == 0) E = 1;

    std::vector<DirichletCharacter> out;
    // lexicographic over character exponent tuples (t_1,...,t_k), last factor
    // fastest; tuple order chosen most-significant-first on factor 0
    std::vector<long> tv(t, 0);
    bool done = false;
    while (!done) {
        // chi(g_i) = zeta_{d_i}^{t_i}; value exponent at level E
        std::vector<long> raw(n);
        long gcd_all = E;
        for (int x = 0; x < n; ++x) {
            long e = 0;
            for (size_t i = 0; i < t; ++i)
                e += tv[i] * elt_exp[x][i] * (E / decomp[i].second);
            e %= E;
            raw[x] = e;
            gcd_all = gcd_l(gcd_all, e);
        }
        long ord = E / (gcd_all == 0 ? E : gcd_all);
        if (ord < 1) ord = 1;
        std::vector<int> exps(n);
        for (int x = 0; x < n; ++x) exps[x] = static_cast<int>(raw[x] / (E / ord));
        out.emplace_back(DirichletCharacter(g, ord, std::move(exps)));

        // increment tuple, last index fastest
        done = true;
        for (size_t i = t; i-- > 0;) {
            if (++tv[i] < decomp[i].second) {
                done = false;
                break;
            }
            tv[i] = 0;
        }
        if (t == 0) break;
    }
    return out;
}

std::vector<DirichletCharacter> characters(const GroupPtr& g) { return DirichletCharacter::all(g); }

GRC idempotent(const DirichletCharacter& chi) {
    const auto& g = chi.group();
    long e = chi.order();
    GRC r(g, CyclotomicNumber::zero(e));
    Rational inv_n(1, g->size());
    for (int i = 0; i < g->size(); ++i) {
        // coefficient of sigma^{-1} is chi(sigma)/#G
        r.coeff(g->inv(i)) = chi.value_at(i) * inv_n;
    }
    return r;
}

}  // namespace eqlv
