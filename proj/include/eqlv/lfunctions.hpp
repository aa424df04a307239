#pragma once

#include <set>
#include <vector>

#include "eqlv/bernoulli.hpp"
#include "eqlv/characters.hpp"
#include "eqlv/gring.hpp"

namespace eqlv {

// Set of places of Q: finite primes plus optionally the archimedean place.
struct PlaceSet {
    std::set<long> primes;
    bool infinite = true;
};

// theta_{Q(mu_f)/Q,S,T}(j) with its defining data; exact rational coefficients.
struct ThetaElement {
    GRQ value;
    long f = 1;
    PlaceSet S;
    std::set<long> T;
    long j = 0;
};

// prod_{l in T} (1 - l^{1-j} sigma_l^{-1}); T disjoint from primes dividing f.
GRQ delta_T(long f, const std::set<long>& T, long j);

// 1 - l^{-j} sigma_l^{-1} for a prime l not dividing f.
GRQ euler_factor_group(long f, long ell, long j);

// theta_{S,T}(j) = sum_chi L_{S,T}(chi^{-1}, j) e_chi, assembled over
// Q(zeta_E) and descended to Q[G].  Requires S >= {infty} u {l | f},
// S and T disjoint, j <= 0.
ThetaElement theta(long f, const PlaceSet& S, const std::set<long>& T, long j);

// Minimal admissible S for level f: {infty} plus the primes dividing f, plus
// any extras.
PlaceSet minimal_S(long f, const std::set<long>& extra = {});

}  // namespace eqlv
