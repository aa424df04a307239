#include "eqlv/lfunctions.hpp"

#include <stdexcept>

namespace eqlv {

PlaceSet minimal_S(long f, const std::set<long>& extra) {
    PlaceSet s;
    s.infinite = true;
    long m = f;
    for (long p = 2; p <= m; ++p)
        if (m % p == 0) {
            s.primes.insert(p);
            while (m % p == 0) m /= p;
        }
    s.primes.insert(extra.begin(), extra.end());
    return s;
}

GRQ delta_T(long f, const std::set<long>& T, long j) {
    GroupPtr g = unit_group(f);
    GRQ acc = grq_scalar(g, 1);
    for (long ell : T) {
        if (f % ell == 0) throw std::invalid_argument("delta_T: T must avoid primes dividing f");
        GRQ factor = grq_scalar(g, 1);
        int idx = g->inv(g->index_of_label(f == 1 ? 1 : ell % f));
        factor.coeff(idx) -= Rational(int_pow(ell, 1 - j));
        acc = acc * factor;
    }
    return acc;
}

GRQ euler_factor_group(long f, long ell, long j) {
    if (f % ell == 0 && f > 1)
        throw std::invalid_argument("euler_factor_group: ell must not divide f");
    GroupPtr g = unit_group(f);
    GRQ factor = grq_scalar(g, 1);
    int idx = g->inv(g->index_of_label(f == 1 ? 1 : ell % f));
    factor.coeff(idx) -= Rational(int_pow(ell, -j));
    return factor;
}

ThetaElement theta(long f, const PlaceSet& S, const std::set<long>& T, long j) {
    if (j > 0) throw std::domain_error("exact channel is non-positive only");
    if (!S.infinite) throw std::invalid_argument("theta: S must contain the infinite place");
    {
        long m = f;
        for (long p = 2; p <= m; ++p)
            if (m % p == 0) {
                if (!S.primes.count(p))
                    throw std::invalid_argument("theta: S must contain every prime dividing f");
                while (m % p == 0) m /= p;
            }
    }
    for (long ell : T)
        if (S.primes.count(ell)) throw std::invalid_argument("theta: S and T must be disjoint");

    GroupPtr g = unit_group(f);
    long E = g->exponent();
    GRC acc(g, CyclotomicNumber::zero(E));

    for (const auto& chi : characters(g)) {
        DirichletCharacter chi_inv = chi.inverse();
        DirichletCharacter prim = chi_inv.primitive_core();
        long cond = prim.modulus();

        // L(prim, j), then S-truncation and T-modification Euler factors;
        // ord(chi) divides the group exponent E, so everything lives in
        // Q(zeta_E).
        long lev = E;
        CyclotomicNumber val = l_value(prim, j).raise_level(lev);
        for (long ell : S.primes) {
            if (cond % ell == 0) continue;  // Euler factor already absent
            CyclotomicNumber factor = CyclotomicNumber::one(lev) -
                                      prim.value(ell).raise_level(lev) *
                                          CyclotomicNumber(lev, Rational(int_pow(ell, -j)));
            val = val * factor;
        }
        for (long ell : T) {
            CyclotomicNumber cv = cond % ell == 0 ? CyclotomicNumber::zero(lev)
                                                  : prim.value(ell).raise_level(lev);
            CyclotomicNumber factor =
                CyclotomicNumber::one(lev) - cv * CyclotomicNumber(lev, Rational(int_pow(ell, 1 - j)));
            val = val * factor;
        }

        // accumulate val * e_chi at level lev; e_chi coefficient at sigma^{-1}
        // is chi(sigma)/#G
        Rational inv_n(1, g->size());
        for (int i = 0; i < g->size(); ++i) {
            CyclotomicNumber term = val * chi.value_at_level(i, lev) * inv_n;
            acc.coeff(g->inv(i)) = acc.coeff(g->inv(i)).raise_level(lev) + term;
        }
    }

    // Galois-descent check: all coefficients must be exactly rational.
    ThetaElement t;
    t.value = grq_zero(g);
    for (int i = 0; i < g->size(); ++i) {
        if (!acc.coeff(i).is_rational())
            throw std::logic_error("theta: non-rational coefficient after character assembly");
        Rational r = acc.coeff(i).rational_part();
        r.canonicalize();
        t.value.coeff(i) = r;
    }
    t.f = f;
    t.S = S;
    t.T = T;
    t.j = j;
    return t;
}

}  // namespace eqlv
