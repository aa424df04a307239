#include "eqlv/hurwitz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eqlv/bernoulli.hpp"

namespace eqlv {

double hurwitz_zeta(double s, double x) {
    if (s == 1.0) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("hurwitz_zeta: x in (0,1] required");

    // For s <= 0 the tail series terminates, so a short shift keeps the
    // partial sums small and avoids cancellation against the closed terms.
    const int N = s <= 0.5 ? 6 : 30;
    const int M = 14;
    double acc = 0.0;
    for (int k = 0; k < N; ++k) acc += std::pow(x + k, -s);
    double xN = x + N;
    acc += std::pow(xN, 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(xN, -s);

    // sum_{i>=1} B_{2i}/(2i)! * s(s+1)...(s+2i-2) * (x+N)^{-s-2i+1}
    double rising = s;  // s(s+1)...(s+m-1), starts at m = 1
    double power = std::pow(xN, -s - 1.0);
    for (int i = 1; i <= M; ++i) {
        static const double b2[] = {0,
                                    1.0 / 6,
                                    -1.0 / 30,
                                    1.0 / 42,
                                    -1.0 / 30,
                                    5.0 / 66,
                                    -691.0 / 2730,
                                    7.0 / 6,
                                    -3617.0 / 510,
                                    43867.0 / 798,
                                    -174611.0 / 330,
                                    854513.0 / 138,
                                    -236364091.0 / 2730,
                                    8553103.0 / 6,
                                    -23749461029.0 / 870};
        double fact = 1.0;
        for (int t = 2; t <= 2 * i; ++t) fact *= t;
        acc += b2[i] / fact * rising * power;
        rising *= (s + 2.0 * i - 1.0) * (s + 2.0 * i);
        power /= xN * xN;
    }
    return acc;
}

std::complex<double> l_float(const DirichletCharacter& chi, double s) {
    long f = chi.modulus();
    if (f == 1) return hurwitz_zeta(s, 1.0);
    std::complex<double> acc = 0.0;
    for (long a = 1; a <= f; ++a) {
        if (gcd_l(a, f) != 1) continue;
        acc += chi.cvalue(a) * hurwitz_zeta(s, static_cast<double>(a) / f);
    }
    return acc * std::pow(static_cast<double>(f), -s);
}

std::complex<double> l_derivative_at_zero(const DirichletCharacter& chi) {
    const int levels = 6;
    std::complex<double> d[levels];
    double h = 0.5;
    for (int i = 0; i < levels; ++i) {
        d[i] = (l_float(chi, h) - l_float(chi, -h)) / (2.0 * h);
        h /= 2.0;
    }
    // error of the central difference is even in h; eliminate h^2, h^4, ...
    for (int k = 1; k < levels; ++k) {
        double fac = std::pow(4.0, k);
        for (int i = levels - 1; i >= k; --i) d[i] = (fac * d[i] - d[i - 1]) / (fac - 1.0);
    }
    return d[levels - 1];
}

std::complex<double> cyclotomic_unit_log_sum(long f, const DirichletCharacter& chi) {
    if (chi.is_odd() || chi.is_trivial() || !chi.is_primitive() || chi.modulus() != f)
        throw std::domain_error("outside verified regime");
    std::complex<double> acc = 0.0;
    for (long a = 1; a < f; ++a) {
        if (gcd_l(a, f) != 1) continue;
        double mod = std::abs(1.0 - std::exp(std::complex<double>(
                                  0.0, 2.0 * std::numbers::pi * a / static_cast<double>(f))));
        acc += chi.cvalue(a) * std::log(mod);
    }
    return acc;
}

}  // namespace eqlv
