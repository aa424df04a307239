#include "eqlv/modalg.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace eqlv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

long pow_l(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<long> flatten(const GRZ& x) {
    std::vector<long> row(x.size());
    for (int i = 0; i < x.size(); ++i) row[i] = x.coeff(i).value();
    return row;
}

// Z/p^n-module generators of the ideal: all G-translates of the given
// ring generators, as coefficient rows.
std::vector<std::vector<long>> translate_rows(const GroupPtr& g, const std::vector<GRZ>& gens,
                                              long p, long n) {
    long pn = pow_l(p, n);
    std::vector<std::vector<long>> rows;
    rows.reserve(gens.size() * g->size());
    for (const auto& gen : gens)
        for (int t = 0; t < g->size(); ++t) {
            GRZ tr = GRZ::basis(g, t, Zmod(1, pn), Zmod(0, pn)) * gen;
            rows.push_back(flatten(tr));
        }
    return rows;
}

}  // namespace

FGIdeal::FGIdeal(GroupPtr g, long p, long n, std::vector<GRZ> gens)
    : g_(std::move(g)),
      p_(p),
      n_(n),
      gens_(std::move(gens)),
      basis_(translate_rows(g_, gens_, p, n), p, n) {}

FGIdeal FGIdeal::unit(GroupPtr g, long p, long n) {
    long pn = pow_l(p, n);
    GRZ one = GRZ::scalar(g, Zmod(1, pn), Zmod(0, pn));
    return FGIdeal(std::move(g), p, n, {one});
}

bool FGIdeal::contains(const GRZ& x) const {
    std::vector<long> v = flatten(x);
    v.resize(g_->size(), 0);
    return basis_.contains(v);
}

bool FGIdeal::operator==(const FGIdeal& o) const { return basis_ == o.basis_; }

bool ideal_equal(const FGIdeal& a, const FGIdeal& b) { return a == b; }

bool ideal_contains(const FGIdeal& a, const GRZ& x) { return a.contains(x); }

GRZ gring_det(const std::vector<std::vector<GRZ>>& m, const GroupPtr& g, long pn) {
    if (m.empty()) return GRZ::scalar(g, Zmod(1, pn), Zmod(0, pn));
    return generic_det(m);
}

FGIdeal fitting_ideal(const PresentedModule& m, int i) {
    long pn = pow_l(m.p, m.n);
    int sz = m.generators - i;
    if (sz <= 0) return FGIdeal::unit(m.g, m.p, m.n);
    int rows = static_cast<int>(m.relations.size());
    if (sz > rows) return FGIdeal::zero(m.g, m.p, m.n);

    std::vector<GRZ> gens;
    auto row_subs = subsets_lex(rows, sz);
    auto col_subs = subsets_lex(m.generators, sz);
    for (const auto& rs : row_subs)
        for (const auto& cs : col_subs) {
            std::vector<std::vector<GRZ>> sub(sz);
            for (int a = 0; a < sz; ++a)
                for (int b = 0; b < sz; ++b) sub[a].push_back(m.relations[rs[a]][cs[b]]);
            gens.push_back(gring_det(sub, m.g, pn));
        }
    return FGIdeal(m.g, m.p, m.n, std::move(gens));
}

std::vector<std::vector<int>> subsets_lex(int d, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > d) return out;
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == d - r + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int t = i + 1; t < r; ++t) cur[t] = cur[t - 1] + 1;
    }
    return out;
}

int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b) {
    long inv = 0;
    for (size_t t = 0; t < b.size(); ++t) {
        size_t pos = 0;
        while (pos < a.size() && a[pos] != b[t]) ++pos;
        if (pos == a.size()) throw std::invalid_argument("shuffle_sign: not a subset");
        inv += static_cast<long>(pos) - static_cast<long>(t);
    }
    return inv % 2 == 0 ? 1 : -1;
}

bool bidual_membership(const ExteriorVector<GRQ>& a, long p) {
    for (const auto& c : a.coords)
        for (int i = 0; i < c.size(); ++i)
            if (c.coeff(i).get_den() % p == 0) return false;
    return true;
}

ExteriorVector<GRZ> norm_map(const ExteriorVector<GRZ>& a,
                             const std::vector<int>& subgroup_elems) {
    if (a.coords.empty()) throw std::invalid_argument("norm_map: empty vector");
    const GroupPtr& g = a.coords[0].group();
    long m = a.coords[0].coeff(0).modulus();
    GRZ nh = grz_zero(g, m);
    for (int h : subgroup_elems) nh = nh + GRZ::basis(g, h, Zmod(1, m), Zmod(0, m));
    ExteriorVector<GRZ> out;
    out.rank = a.rank;
    out.degree = a.degree;
    out.coords.reserve(a.coords.size());
    for (const auto& c : a.coords) out.coords.push_back(project(nh * c, subgroup_elems));
    return out;
}

bool lemma33_check(const GroupPtr& g, const std::vector<int>& subgroup_elems,
                   const std::vector<std::vector<GRZ>>& vectors, int rank, long p, long n) {
    int r = static_cast<int>(vectors.size());
    if (g->size() > 8 || n > 2 || rank > 3 || r > 2)
        throw std::invalid_argument("lemma33_check: size guard exceeded");
    if (r == 0) throw std::invalid_argument("lemma33_check: need at least one vector");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != rank)
            throw std::invalid_argument("lemma33_check: vector length must equal rank");

    // values ideal of the wedge over G, pushed down coefficientwise
    ExteriorVector<GRZ> w = wedge_of(vectors, rank);
    std::vector<GRZ> lhs_gens;
    for (const auto& c : w.coords) lhs_gens.push_back(project(c, subgroup_elems));
    GroupPtr qg = lhs_gens[0].group();

    // values ideal of the wedge of the pushed-down vectors over G/H
    std::vector<std::vector<GRZ>> pv(r);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < rank; ++t) pv[i].push_back(project(vectors[i][t], subgroup_elems));
    ExteriorVector<GRZ> w2 = wedge_of(pv, rank);

    FGIdeal lhs(qg, p, n, std::move(lhs_gens));
    FGIdeal rhs(qg, p, n, w2.coords);
    return ideal_equal(lhs, rhs);
}

CongruenceReport conj35_rank0_check(long f, long p, long n, const std::set<long>& T, long j) {
    auto t0 = Clock::now();
    CongruenceReport rep;
    rep.check = "conj35_rank0";
    std::ostringstream ts;
    {
        bool first = true;
        for (long ell : T) {
            if (!first) ts << ",";
            ts << ell;
            first = false;
        }
    }
    rep.params = {{"f", std::to_string(f)},
                  {"p", std::to_string(p)},
                  {"n", std::to_string(n)},
                  {"j", std::to_string(j)},
                  {"T", ts.str()}};
    auto skip = [&](const std::string& why) {
        rep.status = Status::skipped;
        rep.reason = why;
        rep.time_ms = ms_since(t0);
        return rep;
    };
    if (p % 2 == 0) return skip("p must be odd");
    long pn = pow_l(p, n);
    if (f % pn != 0) return skip("p^n does not divide f");
    if (j > 0) return skip("j must be non-positive");
    for (long ell : T)
        if (f % ell == 0) return skip("T must avoid primes dividing f");

    GroupPtr g = unit_group(f);
    // integral avatar of the minus idempotent
    GRZ avatar = GRZ::scalar(g, Zmod(1, pn), Zmod(0, pn));
    GRZ conj = GRZ::basis(g, g->conjugation(), Zmod(1, pn), Zmod(0, pn));
    avatar = j % 2 == 0 ? avatar - conj : avatar + conj;

    // block-diagonal presentation with one factor 1 - l^{1-j} sigma_l^{-1}
    // per l in T
    PresentedModule mod;
    mod.g = g;
    mod.p = p;
    mod.n = n;
    mod.generators = static_cast<int>(T.size());
    {
        int c = mod.generators;
        GRZ zero = grz_zero(g, pn);
        int idx = 0;
        for (long ell : T) {
            std::vector<GRZ> row(c, zero);
            row[idx] = reduce_mod(euler_factor_group(f, ell, j - 1), p, n);
            mod.relations.push_back(std::move(row));
            ++idx;
        }
    }
    FGIdeal fitt = fitting_ideal(mod, 0);
    std::vector<GRZ> cut;
    for (const auto& x : fitt.generators()) cut.push_back(x * avatar);
    FGIdeal lhs(g, p, n, std::move(cut));

    GRZ delta = reduce_mod(delta_T(f, T, j), p, n);
    FGIdeal rhs(g, p, n, {delta * avatar});

    if (ideal_equal(lhs, rhs)) {
        rep.status = Status::verified;
        rep.witness = to_string(delta * avatar);
    } else {
        rep.status = Status::failed;
        rep.witness = "Fitting ideal differs from principal delta ideal";
    }
    rep.time_ms = ms_since(t0);
    return rep;
}

std::vector<CongruenceReport> conj35_sweep(const SweepGrid& grid) {
    std::vector<CongruenceReport> out;
    for (long f : grid.f_values) {
        long p = 0;
        for (long q = 3; q <= f; q += 2)
            if (f % q == 0) {
                p = q;
                break;
            }
        if (p == 0) continue;
        long vmax = p_adic_valuation(f, p);
        for (long n : grid.n_values) {
            if (n > vmax) continue;
            for (long tp : grid.t_primes) {
                if (f % tp == 0 || tp == p) continue;
                for (long j : grid.j_values) out.push_back(conj35_rank0_check(f, p, n, {tp}, j));
            }
        }
    }
    return out;
}

}  // namespace eqlv
