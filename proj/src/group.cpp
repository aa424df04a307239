#include "eqlv/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eqlv {

namespace {

long order_mod(long a, long m) {
    long x = a % m, ord = 1;
    while (x != 1) {
        x = (x * a) % m;
        ++ord;
        if (ord > m) throw std::logic_error("order_mod: not a unit");
    }
    return ord;
}

// Generators with orders for (Z/q)^x, q an odd prime power or a power of 2.
std::vector<std::pair<long, long>> prime_power_generators(long p, long e, long q) {
    std::vector<std::pair<long, long>> gens;
    if (p == 2) {
        if (e == 1) return gens;  // trivial
        if (e == 2) {
            gens.emplace_back(3, 2);
            return gens;
        }
        gens.emplace_back(q - 1, 2);
        gens.emplace_back(5, q / 4);
        return gens;
    }
    long target = q / p * (p - 1);  // phi(q)
    for (long g = 2; g < q; ++g) {
        if (g % p == 0) continue;
        if (order_mod(g, q) == target) {
            gens.emplace_back(g, target);
            return gens;
        }
    }
    throw std::logic_error("prime_power_generators: no primitive root found");
}

}  // namespace

void AbelianGroup::build_tables() {
    int n = size();
    inv_.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (mul_[i][j] == identity_) inv_[i] = j;
}

std::shared_ptr<const AbelianGroup> AbelianGroup::units_mod(long f) {
    if (f < 1) throw std::invalid_argument("units_mod: f >= 1 required");
    auto g = std::make_shared<AbelianGroup>();
    g->modulus_ = f;
    for (long a = 1; a <= f; ++a)
        if (gcd_l(a, f) == 1) g->labels_.push_back(f == 1 ? 1 : a);
    int n = static_cast<int>(g->labels_.size());
    std::map<long, int> idx;
    for (int i = 0; i < n; ++i) idx[g->labels_[i]] = i;
    g->mul_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g->mul_[i][j] = idx[f == 1 ? 1 : (g->labels_[i] * g->labels_[j]) % f];
    g->identity_ = idx[1];

    // CRT-combined generators of the prime power components.
    long rest = f;
    for (long p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        long e = 0, q = 1;
        while (rest % p == 0) {
            rest /= p;
            ++e;
            q *= p;
        }
        long cof = f / q;
        for (auto [gen, ord] : prime_power_generators(p, e, q)) {
            // x = gen mod q, x = 1 mod f/q
            long x = 1;
            if (cof == 1) {
                x = gen;
            } else {
                long inv_q = inv_mod_l(q % cof, cof);
                // x = gen + q * t with t = (1 - gen) * q^{-1} mod cof
                long t = (((1 - gen) % cof + cof) % cof * inv_q) % cof;
                x = (gen + q * t) % f;
            }
            g->decomp_.emplace_back(idx.at(x), ord);
        }
    }
    g->build_tables();
    return g;
}

int AbelianGroup::index_of_label(long lab) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == lab) return i;
    return -1;
}

long AbelianGroup::exponent() const {
    long e = 1;
    for (int i = 0; i < size(); ++i) e = lcm_l(e, element_order(i));
    return e;
}

bool AbelianGroup::has_conjugation() const {
    return modulus_ > 2 && index_of_label(modulus_ - 1) >= 0;
}

int AbelianGroup::conjugation() const {
    if (!has_conjugation()) throw std::domain_error("no complex conjugation");
    return index_of_label(modulus_ - 1);
}

int AbelianGroup::element_order(int i) const {
    int x = i, ord = 1;
    while (x != identity_) {
        x = mul(x, i);
        ++ord;
    }
    return ord;
}

std::vector<int> AbelianGroup::subgroup_generated(const std::vector<int>& gens) const {
    std::set<int> s = {identity_};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int x : cur)
            for (int h : gens) {
                int y = mul(x, h);
                if (s.insert(y).second) grew = true;
            }
    }
    return {s.begin(), s.end()};
}

std::vector<std::vector<int>> AbelianGroup::subgroups() const {
    std::set<std::vector<int>> found;
    found.insert({identity_});
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = found;
        for (const auto& h : snapshot) {
            for (int x = 0; x < size(); ++x) {
                if (std::binary_search(h.begin(), h.end(), x)) continue;
                std::vector<int> gens = h;
                gens.push_back(x);
                auto bigger = subgroup_generated(gens);
                if (found.insert(bigger).second) grew = true;
            }
        }
    }
    return {found.begin(), found.end()};
}

AbelianGroup::Quotient AbelianGroup::quotient_by(const std::vector<int>& sub) const {
    int n = size();
    std::vector<int> coset_of(n, -1);
    std::vector<long> coset_labels;
    std::vector<std::vector<int>> cosets;
    for (int i = 0; i < n; ++i) {
        if (coset_of[i] >= 0) continue;
        std::vector<int> coset;
        long least = labels_[i];
        for (int h : sub) {
            int x = mul(i, h);
            coset.push_back(x);
            least = std::min(least, labels_[x]);
        }
        int ci = static_cast<int>(cosets.size());
        for (int x : coset) coset_of[x] = ci;
        cosets.push_back(coset);
        coset_labels.push_back(least);
    }
    auto q = std::make_shared<AbelianGroup>();
    q->labels_ = coset_labels;
    int m = static_cast<int>(cosets.size());
    q->mul_.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) q->mul_[a][b] = coset_of[mul(cosets[a][0], cosets[b][0])];
    q->identity_ = coset_of[identity_];
    q->build_tables();
    return Quotient{q, coset_of};
}

GroupPtr unit_group(long f) { return AbelianGroup::units_mod(f); }

}  // namespace eqlv
