#include "eqlv/gring.hpp"

#include <sstream>

namespace eqlv {

long Zmod::joint_modulus(const Zmod& o) const {
    if (m_ == 0) return o.m_;
    if (o.m_ == 0) return m_;
    if (m_ != o.m_) throw std::invalid_argument("Zmod: modulus mismatch");
    return m_;
}

Zmod Zmod::operator+(const Zmod& o) const {
    long m = joint_modulus(o);
    if (m == 0) return Zmod();
    return Zmod(v_ + o.v_, m);
}

Zmod Zmod::operator-(const Zmod& o) const {
    long m = joint_modulus(o);
    if (m == 0) return Zmod();
    return Zmod(v_ - o.v_, m);
}

Zmod Zmod::operator*(const Zmod& o) const {
    long m = joint_modulus(o);
    if (m == 0) return Zmod();
    return Zmod(v_ * o.v_, m);
}

Zmod Zmod::from_rational(const Rational& r, long m) {
    long den = mod_l(r.get_den(), m);
    if (gcd_l(den, m) != 1) {
        std::ostringstream os;
        os << "not p-integral: coefficient " << r.get_str() << " has denominator not prime to "
           << m;
        throw std::domain_error(os.str());
    }
    long num = mod_l(r.get_num(), m);
    return Zmod(num * inv_mod_l(den, m), m);
}

GRQ parity_idempotent(const GroupPtr& g, long j, int sign) {
    if (!g->has_conjugation()) throw std::domain_error("no complex conjugation");
    GRQ e = grq_zero(g);
    Rational half(1, 2);
    e.coeff(g->identity()) = half;
    Rational s = half;
    if (((j % 2) + 2) % 2 == 1) s = -s;
    if (sign < 0) s = -s;
    e.coeff(g->conjugation()) = s;
    return e;
}

GRZ twist(long a, const GRZ& x, long p, long n) {
    const auto& g = x.group();
    long pn = 1;
    for (long i = 0; i < n; ++i) pn *= p;
    if (g->modulus() == 0 || g->modulus() % pn != 0)
        throw std::domain_error("cyclotomic character undefined at this level");
    GRZ r = grz_zero(g, pn);
    for (int i = 0; i < x.size(); ++i) {
        long chi = pow_mod_l(g->label(i) % pn, a, pn);
        r.coeff(i) = x.coeff(i) * Zmod(chi, pn);
    }
    return r;
}

GRZ reduce_mod(const GRQ& x, long p, long n) {
    long pn = 1;
    for (long i = 0; i < n; ++i) pn *= p;
    GRZ r = grz_zero(x.group(), pn);
    for (int i = 0; i < x.size(); ++i) r.coeff(i) = Zmod::from_rational(x.coeff(i), pn);
    return r;
}

std::string to_string(const GRQ& x) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < x.size(); ++i) {
        if (x.coeff(i) == 0) continue;
        if (!first) os << " + ";
        os << "(" << x.coeff(i).get_str() << ")s" << x.group()->label(i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string to_string(const GRZ& x) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < x.size(); ++i) {
        if (x.coeff(i).is_zero()) continue;
        if (!first) os << " + ";
        os << x.coeff(i).value() << "*s" << x.group()->label(i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace eqlv
