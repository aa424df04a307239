#pragma once

#include <complex>
#include <vector>

#include "eqlv/cyclotomic.hpp"
#include "eqlv/gring.hpp"
#include "eqlv/group.hpp"

namespace eqlv {

// Character of (Z/f)^x with exact values in Q(zeta_e), e the character order.
// Values are stored as exponents: chi(a) = zeta_e^{exp(a)}.
class DirichletCharacter {
  public:
    DirichletCharacter(GroupPtr g, long order, std::vector<int> exps);

    const GroupPtr& group() const { return g_; }
    long modulus() const { return g_->modulus(); }
    long order() const { return order_; }

    // chi(a) for a coprime to the modulus, exact in Q(zeta_order).
    CyclotomicNumber value(long a) const;
    CyclotomicNumber value_at(int idx) const;
    // chi(a) raised into Q(zeta_m) for order | m.
    CyclotomicNumber value_at_level(int idx, long m) const;
    std::complex<double> cvalue(long a) const;

    bool is_trivial() const { return order_ == 1; }
    bool is_even() const;
    bool is_odd() const { return !is_even(); }

    long conductor() const;
    bool is_primitive() const { return conductor() == modulus(); }
    // The primitive character of modulus conductor() inducing this one.
    DirichletCharacter primitive_core() const;

    DirichletCharacter inverse() const;
    bool operator==(const DirichletCharacter& o) const;

    // All phi(f) characters, ordered lexicographically by exponent vector on
    // the cyclic factors of the group decomposition.
    static std::vector<DirichletCharacter> all(const GroupPtr& g);

  private:
    GroupPtr g_;
    long order_;
    std::vector<int> exps_;  // per element index, in [0, order_)
};

std::vector<DirichletCharacter> characters(const GroupPtr& g);

// e_chi = (1/#G) sum_sigma chi(sigma) sigma^{-1}, exact over Q(zeta_order).
GRC idempotent(const DirichletCharacter& chi);

}  // namespace eqlv
