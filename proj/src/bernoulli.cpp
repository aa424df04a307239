#include "eqlv/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace eqlv {

namespace {

Integer binomial(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

Rational bernoulli(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli: n >= 0 required");
    static std::mutex mu;
    static std::vector<Rational> cache = {Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m
        Rational s(0);
        for (long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * cache[k];
        Rational b = -s / Rational(binomial(m + 1, m));
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[n];
}

std::vector<Rational> bernoulli_polynomial(long k) {
    // B_k(x) = sum_i C(k,i) B_i x^{k-i}
    std::vector<Rational> c(k + 1, Rational(0));
    for (long i = 0; i <= k; ++i) c[k - i] = Rational(binomial(k, i)) * bernoulli(i);
    return c;
}

CyclotomicNumber gen_bernoulli(const DirichletCharacter& chi, long k) {
    if (k < 1) throw std::invalid_argument("gen_bernoulli: k >= 1 required");
    if (!chi.is_primitive()) throw std::domain_error("primitive character required");
    long f = chi.modulus();
    long e = chi.order();
    auto bk = bernoulli_polynomial(k);
    CyclotomicNumber acc = CyclotomicNumber::zero(e);
    for (long a = 1; a <= f; ++a) {
        if (gcd_l(a, f) != 1) continue;
        Rational x(a, f);
        x.canonicalize();
        Rational val(0);
        for (size_t i = bk.size(); i-- > 0;) val = val * x + bk[i];
        acc = acc + chi.value(a) * val;
    }
    Rational scale(1);
    for (long i = 1; i < k; ++i) scale *= f;
    return acc * scale;
}

CyclotomicNumber l_value(const DirichletCharacter& chi, long j) {
    if (j > 0) throw std::domain_error("exact channel is non-positive only");
    long k = 1 - j;
    CyclotomicNumber b = gen_bernoulli(chi, k);
    return b * Rational(-1, k);
}

Rational riemann_zeta_nonpositive(long j) {
    if (j > 0) throw std::domain_error("exact channel is non-positive only");
    long k = 1 - j;
    // B_{1,triv} = B_1(1) = +1/2, not the bare B_1 = -1/2
    Rational bk = k == 1 ? Rational(1, 2) : bernoulli(k);
    Rational r = -bk / Rational(k);
    r.canonicalize();
    return r;
}

}  // namespace eqlv
