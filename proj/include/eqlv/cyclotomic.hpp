#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "eqlv/rational.hpp"

namespace eqlv {

// Phi_m as integer coefficient vector, constant term first.
std::vector<Integer> cyclotomic_polynomial(long m);

// Defining data of Q(zeta_m) = Q[x]/Phi_m(x); shared between elements of
// the same level.
struct CycloField {
    long level;
    long degree;
    std::vector<Integer> phi;  // monic, length degree+1
};

std::shared_ptr<const CycloField> cyclo_field(long m);

// Element of Q(zeta_m), stored reduced mod Phi_m.
class CyclotomicNumber {
  public:
    CyclotomicNumber() = default;
    explicit CyclotomicNumber(long level, Rational value = 0);

    static CyclotomicNumber zero(long level) { return CyclotomicNumber(level, 0); }
    static CyclotomicNumber one(long level) { return CyclotomicNumber(level, 1); }
    // zeta_level^k
    static CyclotomicNumber root(long level, long k);
    static CyclotomicNumber from_coeffs(long level, std::vector<Rational> coeffs);

    long level() const { return field_->level; }
    long degree() const { return field_->degree; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws unless is_rational().
    Rational rational_part() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const Rational& r) const;
    bool operator==(const CyclotomicNumber& o) const;

    // sigma_a: zeta ↦ zeta^a, gcd(a, level) = 1.
    CyclotomicNumber galois(long a) const;
    // Image in Q(zeta_m2) for level | m2, via zeta_level = zeta_m2^(m2/level).
    CyclotomicNumber raise_level(long m2) const;
    // Evaluation at zeta_level ↦ e^{2*pi*i*a/level}, gcd(a, level) = 1.
    std::complex<double> embed(long a = 1) const;

  private:
    std::shared_ptr<const CycloField> field_;
    std::vector<Rational> c_;  // size degree, reduced

    void require_same_field(const CyclotomicNumber& o) const;
};

inline CyclotomicNumber operator*(const Rational& r, const CyclotomicNumber& z) { return z * r; }

// The function d_j(t) = P_j(t)/(1-t)^j built by the t*d/dt recurrence from
// d_1(t) = -t/(1-t).  Numerator coefficients are exact rationals.
class PolylogD {
  public:
    explicit PolylogD(long j);

    long index() const { return j_; }
    const std::vector<Rational>& numerator() const { return num_; }
    // (1-t)^j expanded, constant term first.
    std::vector<Rational> denominator() const;

    // Exact evaluation at a rational point t != 1.
    Rational evaluate(const Rational& t) const;
    std::complex<double> evaluate(std::complex<double> t) const;

  private:
    long j_;
    std::vector<Rational> num_;  // constant term first
};

}  // namespace eqlv
