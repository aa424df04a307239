#include <doctest.h>

#include <complex>
#include <random>

#include "eqlv/cyclotomic.hpp"
#include "eqlv/rational.hpp"

using namespace eqlv;

namespace {

CyclotomicNumber random_cyclo(std::mt19937& rng, long m) {
    std::uniform_int_distribution<long> num(-5, 5);
    long deg = cyclo_field(m)->degree;
    std::vector<Rational> c(deg);
    for (auto& x : c) x = Rational(num(rng));
    return CyclotomicNumber::from_coeffs(m, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(9) == std::vector<Integer>{1, 0, 0, 1, 0, 0, 1});
}

TEST_CASE("zeta^m = 1 and eager reduction") {
    for (long m : {5L, 8L, 12L}) {
        CyclotomicNumber z = CyclotomicNumber::root(m, 1);
        CyclotomicNumber p = CyclotomicNumber::one(m);
        for (long i = 0; i < m; ++i) p = p * z;
        CHECK(p == CyclotomicNumber::one(m));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(7);
    for (long m : {7L, 12L, 30L}) {
        for (int t = 0; t < 10; ++t) {
            auto a = random_cyclo(rng, m), b = random_cyclo(rng, m), c = random_cyclo(rng, m);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("galois action") {
    std::mt19937 rng(11);
    auto z = random_cyclo(rng, 7);
    CHECK(z.galois(1) == z);
    CHECK(z.galois(2).galois(3) == z.galois(6));
    CHECK_THROWS(z.galois(7));
    // sigma_{m-1} is complex conjugation under every embedding
    auto zc = z.galois(6).embed(1);
    CHECK(std::abs(zc - std::conj(z.embed(1))) < 1e-12);
}

TEST_CASE("complex embedding") {
    CHECK(std::abs(CyclotomicNumber::root(4, 1).embed(1) - std::complex<double>(0, 1)) < 1e-15);
    auto w = CyclotomicNumber::one(3) - CyclotomicNumber::root(3, 1);
    CHECK(std::abs(std::abs(w.embed(1)) - std::sqrt(3.0)) < 1e-12);
    // embed(sigma_a z, 1) = embed(z, a)
    std::mt19937 rng(13);
    auto z = random_cyclo(rng, 12);
    for (long a : {5L, 7L, 11L}) CHECK(std::abs(z.galois(a).embed(1) - z.embed(a)) < 1e-10);
    // ring homomorphism to floats
    auto b = random_cyclo(rng, 12);
    CHECK(std::abs((z * b).embed(1) - z.embed(1) * b.embed(1)) < 1e-10);
}

TEST_CASE("norm of 1 - zeta_p is p") {
    for (long p : {3L, 5L, 7L, 11L}) {
        auto prod = CyclotomicNumber::one(p);
        for (long a = 1; a < p; ++a)
            prod = prod * (CyclotomicNumber::one(p) - CyclotomicNumber::root(p, a));
        REQUIRE(prod.is_rational());
        CHECK(prod.rational_part() == Rational(p));
    }
}

TEST_CASE("level raising is a ring embedding") {
    auto z3 = CyclotomicNumber::root(3, 1);
    auto lifted = z3.raise_level(12);
    CHECK(lifted == CyclotomicNumber::root(12, 4));
    std::mt19937 rng(17);
    auto a = random_cyclo(rng, 5), b = random_cyclo(rng, 5);
    CHECK((a * b).raise_level(15) == a.raise_level(15) * b.raise_level(15));
}

TEST_CASE("polylog d_1 and d_2") {
    PolylogD d1(1);
    // -t/(1-t) at t=-1 is 1/2
    CHECK(d1.evaluate(Rational(-1)) == Rational(1, 2));
    PolylogD d2(2);
    // t/(1-t)^2 at t=-1 is -1/4
    CHECK(d2.evaluate(Rational(-1)) == Rational(-1, 4));
    CHECK(d2.evaluate(Rational(1, 2)) == Rational(2));
    CHECK_THROWS(d1.evaluate(Rational(1)));
    CHECK_THROWS(PolylogD(0));
}

TEST_CASE("polylog numerators match Eulerian numbers") {
    // Li_{1-j}(t) = (sum_k A(j-1,k) t^{k+1})/(1-t)^j, so the numerator of
    // d_j is ((-1)^j/(j-1)!) times the Eulerian polynomial; A by the
    // standard recurrence as an independent oracle.
    std::vector<std::vector<Rational>> euler = {{1}};  // A(0,0)=1
    for (long nrow = 1; nrow <= 7; ++nrow) {
        std::vector<Rational> row(nrow + 1, 0);
        for (long k = 0; k <= nrow; ++k) {
            Rational up = k <= nrow - 1 ? euler.back()[k] : Rational(0);
            Rational left = k >= 1 && k - 1 <= nrow - 1 ? euler.back()[k - 1] : Rational(0);
            row[k] = Rational(k + 1) * up + Rational(nrow - k) * left;
        }
        euler.push_back(row);
    }
    Rational fact = 1;
    for (long j = 1; j <= 8; ++j) {
        if (j > 1) fact *= Rational(j - 1);
        PolylogD dj(j);
        Rational sign = j % 2 == 0 ? 1 : -1;
        std::vector<Rational> expect(j + 1, 0);
        for (long k = 0; k <= j - 1; ++k) expect[k + 1] = sign / fact * euler[j - 1][k];
        while (expect.size() > dj.numerator().size()) {
            REQUIRE(expect.back() == 0);
            expect.pop_back();
        }
        std::vector<Rational> got = dj.numerator();
        got.resize(expect.size(), Rational(0));
        CHECK(got == expect);
    }
}

TEST_CASE("polylog recurrence consistency at sample points") {
    // d_{j+1}(t) = (-1/j) t d/dt d_j(t): check with an exact symmetric
    // quotient on the rational-function values via the quotient rule proxy
    // (evaluate both sides from the coefficient vectors).
    for (long j = 1; j <= 9; ++j) {
        PolylogD dj(j), dj1(j + 1);
        // numeric derivative at a rational point, exact via coefficients:
        // t * d/dt [P(t)/(1-t)^j] = (t P'(t)(1-t) + j t P(t)) / (1-t)^{j+1}
        Rational t(1, 3);
        const auto& num = dj.numerator();
        Rational pt = 0, dpt = 0, tp = 1;
        for (size_t i = 0; i < num.size(); ++i) {
            pt += num[i] * tp;
            if (i >= 1) dpt += Rational(static_cast<long>(i)) * num[i] * tp / t;
            tp *= t;
        }
        Rational one_minus = 1 - t;
        Rational lhs = (t * dpt * one_minus + Rational(j) * t * pt);
        Rational denom = 1;
        for (long i = 0; i < j + 1; ++i) denom *= one_minus;
        lhs = lhs / denom;
        CHECK(dj1.evaluate(t) == lhs * Rational(-1, j));
    }
}
