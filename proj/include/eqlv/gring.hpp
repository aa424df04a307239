#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include "eqlv/cyclotomic.hpp"
#include "eqlv/group.hpp"
#include "eqlv/rational.hpp"

namespace eqlv {

// Element of Z/m at a runtime modulus; modulus 0 denotes an unattached zero
// so that containers can be default-filled.
class Zmod {
  public:
    Zmod() = default;
    Zmod(long v, long m) : m_(m) { v_ = ((v % m) + m) % m; }
    static Zmod from_integer(const Integer& v, long m) { return Zmod(mod_l(v, m), m); }
    // Reduction of a rational with denominator prime to m.
    static Zmod from_rational(const Rational& r, long m);

    long value() const { return v_; }
    long modulus() const { return m_; }
    bool is_zero() const { return v_ == 0; }

    Zmod operator+(const Zmod& o) const;
    Zmod operator-(const Zmod& o) const;
    Zmod operator*(const Zmod& o) const;
    Zmod operator-() const { return m_ ? Zmod(m_ - v_, m_) : *this; }
    Zmod inverse() const { return Zmod(inv_mod_l(v_, m_), m_); }
    Zmod pow(long e) const { return Zmod(pow_mod_l(v_, e, m_), m_); }
    bool operator==(const Zmod& o) const { return v_ == o.v_; }
    bool is_unit() const { return m_ != 0 && gcd_l(v_, m_) == 1; }

  private:
    long v_ = 0;
    long m_ = 0;

    long joint_modulus(const Zmod& o) const;
};

// Dense group-ring element over a coefficient ring T (Rational,
// CyclotomicNumber, Zmod or std::complex<double>).
template <typename T>
class GroupRingElement {
  public:
    GroupRingElement() = default;
    GroupRingElement(GroupPtr g, T zero) : g_(std::move(g)), c_(g_->size(), zero) {}

    static GroupRingElement basis(GroupPtr g, int idx, T one, T zero) {
        GroupRingElement e(std::move(g), std::move(zero));
        e.c_[idx] = std::move(one);
        return e;
    }
    static GroupRingElement scalar(GroupPtr g, T value, T zero) {
        GroupRingElement e(g, std::move(zero));
        e.c_[g->identity()] = std::move(value);
        return e;
    }

    const GroupPtr& group() const { return g_; }
    const T& coeff(int i) const { return c_[i]; }
    T& coeff(int i) { return c_[i]; }
    int size() const { return static_cast<int>(c_.size()); }

    GroupRingElement operator+(const GroupRingElement& o) const {
        check(o);
        GroupRingElement r = *this;
        for (int i = 0; i < size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
        return r;
    }
    GroupRingElement operator-(const GroupRingElement& o) const {
        check(o);
        GroupRingElement r = *this;
        for (int i = 0; i < size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
        return r;
    }
    GroupRingElement operator*(const GroupRingElement& o) const {
        check(o);
        GroupRingElement r = *this;
        for (auto& c : r.c_) c = c - c;  // zero of T
        for (int i = 0; i < size(); ++i) {
            for (int j = 0; j < size(); ++j) {
                int k = g_->mul(i, j);
                r.c_[k] = r.c_[k] + c_[i] * o.c_[j];
            }
        }
        return r;
    }
    GroupRingElement operator*(const T& s) const {
        GroupRingElement r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    GroupRingElement operator-() const {
        GroupRingElement r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    bool operator==(const GroupRingElement& o) const {
        if (g_->size() != o.g_->size()) return false;
        for (int i = 0; i < size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }

    // Sum of coefficients.
    T augmentation() const {
        T s = c_[0];
        for (int i = 1; i < size(); ++i) s = s + c_[i];
        return s;
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!(c == (c - c))) return false;
        return true;
    }

  private:
    GroupPtr g_;
    std::vector<T> c_;

    void check(const GroupRingElement& o) const {
        if (g_.get() != o.g_.get() && g_->size() != o.g_->size())
            throw std::invalid_argument("GroupRingElement: group mismatch");
    }
};

using GRQ = GroupRingElement<Rational>;
using GRC = GroupRingElement<CyclotomicNumber>;
using GRZ = GroupRingElement<Zmod>;

inline GRQ grq_zero(GroupPtr g) { return GRQ(std::move(g), Rational(0)); }
inline GRZ grz_zero(GroupPtr g, long m) { return GRZ(std::move(g), Zmod(0, m)); }
inline GRQ grq_scalar(GroupPtr g, Rational v) { return GRQ::scalar(g, std::move(v), Rational(0)); }

// e_j^{+/-} = (1 +/- (-1)^j c)/2 in Q[G]; requires f > 2.
GRQ parity_idempotent(const GroupPtr& g, long j, int sign);

// tw_a on Z/p^n[G]: sigma_b -> b^a sigma_b; requires p^n | f.
GRZ twist(long a, const GRZ& x, long p, long n);

// Coefficientwise sum along H-cosets; the natural surjection onto the group
// ring of G/H.
template <typename T>
GroupRingElement<T> project(const GroupRingElement<T>& x, const std::vector<int>& subgroup_elems) {
    auto quo = x.group()->quotient_by(subgroup_elems);
    GroupRingElement<T> r(quo.group, x.coeff(0) - x.coeff(0));
    for (int i = 0; i < x.size(); ++i)
        r.coeff(quo.coset_of[i]) = r.coeff(quo.coset_of[i]) + x.coeff(i);
    return r;
}

// Projection of a group ring over (Z/f')^x onto (Z/f)^x for f | f', summing
// coefficients along residues mod f.
template <typename T>
GroupRingElement<T> project_to_level(const GroupRingElement<T>& x, long f) {
    const auto& big = x.group();
    if (big->modulus() % f != 0)
        throw std::invalid_argument("project_to_level: target level must divide source level");
    GroupPtr small = unit_group(f);
    GroupRingElement<T> r(small, x.coeff(0) - x.coeff(0));
    for (int i = 0; i < x.size(); ++i) {
        long lab = f == 1 ? 1 : big->label(i) % f;
        int k = small->index_of_label(lab);
        r.coeff(k) = r.coeff(k) + x.coeff(i);
    }
    return r;
}

// Coefficientwise reduction mod p^n; throws std::domain_error naming the
// offending coefficient if some denominator is divisible by p.
GRZ reduce_mod(const GRQ& x, long p, long n);

std::string to_string(const GRQ& x);
std::string to_string(const GRZ& x);

}  // namespace eqlv
