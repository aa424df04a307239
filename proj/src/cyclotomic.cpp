#include "eqlv/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace eqlv {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> rem = a;
    std::vector<Integer> quot(a.size() - b.size() + 1, 0);
    long db = static_cast<long>(b.size()) - 1;
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        Integer q = rem[i] / b[db];
        quot[i - db] = q;
        for (long k = 0; k <= db; ++k) rem[i - db + k] -= q * b[k];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m >= 1 required");
    // x^m - 1 divided by Phi_d for proper divisors d.
    std::vector<Integer> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_div_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

std::shared_ptr<const CycloField> cyclo_field(long m) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<CycloField>();
    f->level = m;
    f->phi = cyclotomic_polynomial(m);
    f->degree = static_cast<long>(f->phi.size()) - 1;
    cache[m] = f;
    return f;
}

CyclotomicNumber::CyclotomicNumber(long level, Rational value) : field_(cyclo_field(level)) {
    c_.assign(field_->degree, Rational(0));
    if (field_->degree > 0) {
        c_[0] = std::move(value);
    } else {
        // degree 0 cannot occur: Phi_m has degree phi(m) >= 1
        throw std::logic_error("CyclotomicNumber: degenerate field");
    }
    // level 1: Phi_1 = x - 1, degree 1, representation is the rational itself
}

CyclotomicNumber CyclotomicNumber::root(long level, long k) {
    CyclotomicNumber z = zero(level);
    k = ((k % level) + level) % level;
    // reduce x^k mod Phi_level
    std::vector<Rational> raw(k + 1, Rational(0));
    raw[k] = 1;
    return from_coeffs(level, std::move(raw));
}

CyclotomicNumber CyclotomicNumber::from_coeffs(long level, std::vector<Rational> coeffs) {
    CyclotomicNumber z = zero(level);
    const auto& phi = z.field_->phi;
    long deg = z.field_->degree;
    // reduce mod Phi (monic)
    for (long i = static_cast<long>(coeffs.size()) - 1; i >= deg; --i) {
        Rational q = coeffs[i];
        if (q == 0) continue;
        for (long k = 0; k <= deg; ++k) coeffs[i - deg + k] -= q * Rational(phi[k]);
    }
    coeffs.resize(deg, Rational(0));
    for (auto& c : coeffs) c.canonicalize();
    z.c_ = std::move(coeffs);
    return z;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    if (level() == 1) return true;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CyclotomicNumber::rational_part() const {
    if (level() == 1) {
        // element a + b*x mod (x-1) is stored with degree 1... degree of Phi_1 is 1,
        // so representation is c_[0] + c_[... ]: single coefficient, zeta_1 = 1.
        return c_[0];
    }
    if (!is_rational()) throw std::domain_error("rational_part: element is not rational");
    return c_[0];
}

void CyclotomicNumber::require_same_field(const CyclotomicNumber& o) const {
    if (!field_ || !o.field_ || field_->level != o.field_->level)
        throw std::invalid_argument("CyclotomicNumber: level mismatch");
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    require_same_field(o);
    CyclotomicNumber r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    require_same_field(o);
    CyclotomicNumber r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    require_same_field(o);
    std::vector<Rational> prod(2 * c_.size(), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return from_coeffs(level(), std::move(prod));
}

CyclotomicNumber CyclotomicNumber::operator*(const Rational& r) const {
    CyclotomicNumber z = *this;
    for (auto& c : z.c_) c *= r;
    return z;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    if (!field_ || !o.field_ || field_->level != o.field_->level) return false;
    return c_ == o.c_;
}

CyclotomicNumber CyclotomicNumber::galois(long a) const {
    long m = level();
    if (gcd_l(a, m) != 1) throw std::domain_error("galois: gcd(a, level) != 1");
    a = ((a % m) + m) % m;
    std::vector<Rational> raw(static_cast<size_t>(a) * (c_.size() - 1) + c_.size(), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * a] += c_[i];
    return from_coeffs(m, std::move(raw));
}

CyclotomicNumber CyclotomicNumber::raise_level(long m2) const {
    long m = level();
    if (m2 % m != 0) throw std::invalid_argument("raise_level: level does not divide target");
    long stride = m2 / m;
    std::vector<Rational> raw(static_cast<size_t>(stride) * (c_.size() - 1) + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * stride] += c_[i];
    return from_coeffs(m2, std::move(raw));
}

std::complex<double> CyclotomicNumber::embed(long a) const {
    long m = level();
    if (gcd_l(a, m) != 1) throw std::domain_error("embed: gcd(a, level) != 1");
    std::complex<double> acc = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double arg = 2.0 * std::numbers::pi * static_cast<double>((a * static_cast<long>(i)) % m) /
                     static_cast<double>(m);
        acc += c_[i].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

PolylogD::PolylogD(long j) : j_(j) {
    if (j < 1) throw std::invalid_argument("PolylogD: j >= 1 required");
    // d_1 = -t/(1-t)
    num_ = {Rational(0), Rational(-1)};
    for (long i = 1; i < j; ++i) {
        // d_{i+1} = (-1/i) * (t d/dt) d_i, with d_i = P/(1-t)^i:
        // (t d/dt)(P/(1-t)^i) = (t P' (1-t) + i t P) / (1-t)^{i+1}
        std::vector<Rational> next(num_.size() + 1, Rational(0));
        for (size_t k = 1; k < num_.size(); ++k) {
            Rational kp = Rational(static_cast<long>(k)) * num_[k];
            next[k] += kp;       // t * P'
            next[k + 1] -= kp;   // -t^2 * P'
        }
        for (size_t k = 0; k < num_.size(); ++k) next[k + 1] += Rational(i) * num_[k];
        Rational scale(-1, i);
        for (auto& c : next) {
            c *= scale;
            c.canonicalize();
        }
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        num_ = std::move(next);
    }
}

std::vector<Rational> PolylogD::denominator() const {
    std::vector<Rational> den = {Rational(1)};
    for (long i = 0; i < j_; ++i) {
        std::vector<Rational> next(den.size() + 1, Rational(0));
        for (size_t k = 0; k < den.size(); ++k) {
            next[k] += den[k];
            next[k + 1] -= den[k];
        }
        den = std::move(next);
    }
    return den;
}

Rational PolylogD::evaluate(const Rational& t) const {
    if (t == 1) throw std::domain_error("PolylogD::evaluate: pole at t = 1");
    Rational p(0);
    for (size_t i = num_.size(); i-- > 0;) p = p * t + num_[i];
    Rational d(1);
    Rational omt = Rational(1) - t;
    for (long i = 0; i < j_; ++i) d *= omt;
    Rational r = p / d;
    r.canonicalize();
    return r;
}

std::complex<double> PolylogD::evaluate(std::complex<double> t) const {
    std::complex<double> p = 0;
    for (size_t i = num_.size(); i-- > 0;) p = p * t + num_[i].get_d();
    return p / std::pow(1.0 - t, static_cast<double>(j_));
}

}  // namespace eqlv
