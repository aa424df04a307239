#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eqlv {

using Rational = mpq_class;
using Integer = mpz_class;

// b^e for e >= 0.
inline Integer int_pow(long b, long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b < 0 ? -b : b),
                  static_cast<unsigned long>(e));
    if (b < 0 && (e & 1)) r = -r;
    return r;
}

// Least non-negative residue of x mod m (m > 0).
inline long mod_l(const Integer& x, long m) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_si();
}

inline long gcd_l(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_l(long a, long b) { return a / gcd_l(a, b) * b; }

// Inverse of a mod m; throws if gcd(a, m) != 1.
inline long inv_mod_l(long a, long m) {
    long r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
    while (r1) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        long t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("inv_mod_l: not invertible mod " + std::to_string(m));
    return ((t0 % m) + m) % m;
}

inline long pow_mod_l(long b, long e, long m) {
    if (e < 0) return pow_mod_l(inv_mod_l(b, m), -e, m);
    long r = 1 % m;
    b = ((b % m) + m) % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace eqlv
