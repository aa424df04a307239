#pragma once

#include <complex>

#include "eqlv/characters.hpp"

namespace eqlv {

// Hurwitz zeta(s, x) for x in (0, 1], s != 1, |s| <= ~10, by Euler-Maclaurin
// summation; relative error around 1e-13 at this range.
double hurwitz_zeta(double s, double x);

// L(chi, s) = f^{-s} sum_a chi(a) zeta(s, a/f) for primitive chi.
std::complex<double> l_float(const DirichletCharacter& chi, double s);

// L'(chi, 0) by central differences with Richardson extrapolation
// (step halving from h = 0.5, six levels).
std::complex<double> l_derivative_at_zero(const DirichletCharacter& chi);

// R(chi) = sum_{a in (Z/f)^x} chi(a) log|1 - e^{2 pi i a / f}| for even,
// nontrivial, primitive chi.  The weight-0 regulator identity implemented in
// the checks is L'(chi, 0) = -(1/2) R(chi).
std::complex<double> cyclotomic_unit_log_sum(long f, const DirichletCharacter& chi);

}  // namespace eqlv
