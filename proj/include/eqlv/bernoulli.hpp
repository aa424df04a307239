#pragma once

#include <vector>

#include "eqlv/characters.hpp"
#include "eqlv/rational.hpp"

namespace eqlv {

// B_n with B_1 = -1/2, by the defining recurrence (cached).
Rational bernoulli(long n);

// Coefficients of the Bernoulli polynomial B_k(x), constant term first.
std::vector<Rational> bernoulli_polynomial(long k);

// Generalized Bernoulli number B_{k,chi} = f^{k-1} sum_{a=1}^{f} chi(a) B_k(a/f)
// for a primitive character chi; exact in Q(zeta_e).  For the trivial
// character mod 1 this gives B_k(1), so B_{1,1} = +1/2.
CyclotomicNumber gen_bernoulli(const DirichletCharacter& chi, long k);

// Exact L(chi, j) = -B_{1-j,chi}/(1-j) for primitive chi and j <= 0.
CyclotomicNumber l_value(const DirichletCharacter& chi, long j);

// zeta(j) for j <= 0 (trivial character mod 1 channel).
Rational riemann_zeta_nonpositive(long j);

}  // namespace eqlv
