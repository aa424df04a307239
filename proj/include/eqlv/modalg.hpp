#pragma once

#include <optional>
#include <vector>

#include "eqlv/congruences.hpp"
#include "eqlv/gring.hpp"
#include "eqlv/howell.hpp"

namespace eqlv {

// Finitely presented module over Z/p^n[G]: cokernel of the relation matrix
// (rows = relations, columns = generators).
struct PresentedModule {
    GroupPtr g;
    long p = 0, n = 0;
    std::vector<std::vector<GRZ>> relations;
    int generators = 0;
};

// Finitely generated ideal of Z/p^n[G] with a canonical triangular basis of
// the underlying Z/p^n-module (G-orbit expansion + Howell reduction).
class FGIdeal {
  public:
    FGIdeal(GroupPtr g, long p, long n, std::vector<GRZ> gens);

    static FGIdeal zero(GroupPtr g, long p, long n) { return FGIdeal(std::move(g), p, n, {}); }
    static FGIdeal unit(GroupPtr g, long p, long n);

    const GroupPtr& group() const { return g_; }
    const std::vector<GRZ>& generators() const { return gens_; }
    const HowellForm& canonical() const { return basis_; }

    bool contains(const GRZ& x) const;
    bool operator==(const FGIdeal& o) const;

  private:
    GroupPtr g_;
    long p_, n_;
    std::vector<GRZ> gens_;
    HowellForm basis_;
};

bool ideal_equal(const FGIdeal& a, const FGIdeal& b);
bool ideal_contains(const FGIdeal& a, const GRZ& x);

// Determinant over the group ring by cofactor expansion (small matrices).
GRZ gring_det(const std::vector<std::vector<GRZ>>& m, const GroupPtr& g, long pn);

// Ideal of (generators - i)-size minors of the relation matrix.
FGIdeal fitting_ideal(const PresentedModule& m, int i);

// --- exterior algebra over a based free module -------------------------------

// Lexicographically ordered r-subsets of {0,...,d-1}.
std::vector<std::vector<int>> subsets_lex(int d, int r);

// Sign of the shuffle sorting (B, A \ B) back to A; B must be a subset of A.
int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b);

// Element of the r-th exterior power of a based free module of rank d, with
// coordinates indexed by r-subsets in lexicographic order.  R is a group-ring
// coefficient type (GRZ or GRQ).  The same representation serves for wedges
// of dual vectors.
template <typename R>
struct ExteriorVector {
    int rank = 0;
    int degree = 0;
    std::vector<R> coords;

    static ExteriorVector zero(int d, int r, const R& zero_elt) {
        ExteriorVector v;
        v.rank = d;
        v.degree = r;
        v.coords.assign(subsets_lex(d, r).size(), zero_elt);
        return v;
    }
};

// Wedge of degree-1 vectors (given as coordinate lists of length d):
// coordinate at B = det(v_i[b_j]).
template <typename R>
ExteriorVector<R> wedge_of(const std::vector<std::vector<R>>& vectors, int d);

// The canonical pairing: a of degree s against a dual wedge of degree r <= s,
// yielding degree s - r.
template <typename R>
ExteriorVector<R> wedge_pair(const ExteriorVector<R>& a, const ExteriorVector<R>& dual);

// Membership of a rational exterior vector in the exterior bidual of the
// standard lattice: true iff pairing with every dual-basis wedge is
// p-integral.
bool bidual_membership(const ExteriorVector<GRQ>& a, long p);

// Norm map to the quotient: each coordinate is multiplied by the norm element
// of H and pushed down to G/H.
ExteriorVector<GRZ> norm_map(const ExteriorVector<GRZ>& a, const std::vector<int>& subgroup_elems);

// Both sides of the norm-compatibility identity for a pure wedge
// v_1 ^ ... ^ v_r: values-ideal computed on G then projected, versus
// coordinates projected entrywise then wedged over G/H.  Sizes are guarded
// (|G| <= 8, n <= 2, rank <= 3, r <= 2).
bool lemma33_check(const GroupPtr& g, const std::vector<int>& subgroup_elems,
                   const std::vector<std::vector<GRZ>>& vectors, int rank, long p, long n);

// Rank-0 Fitting-ideal identity: the minus part of Fitt^0 of the T-residue
// presentation equals the principal ideal generated by delta_T(j), both cut
// by the integral avatar 1 - (-1)^j c.
CongruenceReport conj35_rank0_check(long f, long p, long n, const std::set<long>& T, long j);

// conj35_rank0_check across the f/n/T/j lists of a sweep grid.
std::vector<CongruenceReport> conj35_sweep(const SweepGrid& grid);

// --- template implementations ------------------------------------------------

template <typename R>
R generic_det(const std::vector<std::vector<R>>& m) {
    size_t k = m.size();
    if (k == 1) return m[0][0];
    R acc = m[0][0] - m[0][0];
    for (size_t i = 0; i < k; ++i) {
        std::vector<std::vector<R>> minor;
        minor.reserve(k - 1);
        for (size_t r = 1; r < k; ++r) {
            std::vector<R> row;
            row.reserve(k - 1);
            for (size_t c = 0; c < k; ++c)
                if (c != i) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        R term = m[0][i] * generic_det(minor);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

template <typename R>
ExteriorVector<R> wedge_of(const std::vector<std::vector<R>>& vectors, int d) {
    int r = static_cast<int>(vectors.size());
    if (r == 0) throw std::invalid_argument("wedge_of: need at least one vector");
    R zero = vectors[0][0] - vectors[0][0];
    auto out = ExteriorVector<R>::zero(d, r, zero);
    auto subs = subsets_lex(d, r);
    for (size_t bi = 0; bi < subs.size(); ++bi) {
        std::vector<std::vector<R>> m(r, std::vector<R>());
        for (int i = 0; i < r; ++i)
            for (int jj = 0; jj < r; ++jj) m[i].push_back(vectors[i][subs[bi][jj]]);
        out.coords[bi] = generic_det(m);
    }
    return out;
}

template <typename R>
ExteriorVector<R> wedge_pair(const ExteriorVector<R>& a, const ExteriorVector<R>& dual) {
    if (a.rank != dual.rank) throw std::invalid_argument("wedge_pair: rank mismatch");
    if (dual.degree > a.degree) throw std::invalid_argument("wedge_pair: degree mismatch");
    int d = a.rank, s = a.degree, r = dual.degree;
    R zero = a.coords[0] - a.coords[0];
    auto out = ExteriorVector<R>::zero(d, s - r, zero);
    auto subs_s = subsets_lex(d, s);
    auto subs_r = subsets_lex(d, r);
    auto subs_sr = subsets_lex(d, s - r);
    for (size_t ai = 0; ai < subs_s.size(); ++ai) {
        const auto& A = subs_s[ai];
        for (size_t bi = 0; bi < subs_r.size(); ++bi) {
            const auto& B = subs_r[bi];
            // B must be a subset of A
            std::vector<int> rest;
            bool sub = true;
            {
                size_t t = 0;
                for (int x : A) {
                    if (t < B.size() && B[t] == x)
                        ++t;
                    else
                        rest.push_back(x);
                }
                sub = t == B.size();
            }
            if (!sub) continue;
            int sign = shuffle_sign(A, B);
            // locate rest in the (s-r)-subset list
            size_t ri = 0;
            while (ri < subs_sr.size() && subs_sr[ri] != rest) ++ri;
            R term = dual.coords[bi] * a.coords[ai];
            out.coords[ri] = sign > 0 ? out.coords[ri] + term : out.coords[ri] - term;
        }
    }
    return out;
}

}  // namespace eqlv
