#include <doctest.h>

#include "eqlv/bernoulli.hpp"
#include "eqlv/lfunctions.hpp"
#include "test_util.hpp"

using namespace eqlv;
using namespace eqlv::testutil;

namespace {

DirichletCharacter find_char(long f, bool odd, long order) {
    for (const auto& chi : characters(unit_group(f)))
        if (chi.is_odd() == odd && chi.order() == order) return chi;
    throw std::runtime_error("no such character");
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("generalized Bernoulli numbers") {
    CHECK(gen_bernoulli(find_char(3, true, 2), 1).rational_part() == Rational(-1, 3));
    CHECK(gen_bernoulli(find_char(4, true, 2), 1).rational_part() == Rational(-1, 2));
    auto triv = characters(unit_group(1))[0];
    CHECK(gen_bernoulli(triv, 2).rational_part() == Rational(1, 6));
    CHECK(gen_bernoulli(triv, 1).rational_part() == Rational(1, 2));
    // imprimitive characters are rejected
    for (const auto& chi : characters(unit_group(9)))
        if (!chi.is_primitive()) CHECK_THROWS(gen_bernoulli(chi, 1));
}

TEST_CASE("exact L-values") {
    CHECK(l_value(find_char(3, true, 2), 0).rational_part() == Rational(1, 3));
    auto triv = characters(unit_group(1))[0];
    CHECK(l_value(triv, -1).rational_part() == Rational(-1, 12));
    // parity-forced zero for the even quadratic mod 5 at j=0
    CHECK(l_value(find_char(5, false, 2), 0).is_zero());
    CHECK_THROWS(l_value(triv, 1));
}

TEST_CASE("zeta at non-positive integers") {
    CHECK(riemann_zeta_nonpositive(0) == Rational(-1, 2));
    CHECK(riemann_zeta_nonpositive(-1) == Rational(-1, 12));
    CHECK(riemann_zeta_nonpositive(-3) == Rational(1, 120));
    CHECK(riemann_zeta_nonpositive(-7) == Rational(1, 240));
    CHECK(riemann_zeta_nonpositive(-2) == Rational(0));
}

TEST_CASE("delta_T and group Euler factors") {
    GroupPtr g = unit_group(3);
    CHECK(delta_T(3, {}, 0) == grq_scalar(g, 1));
    CHECK(delta_T(3, {2}, 0) == grq_of(g, {{1, 1}, {2, -2}}));
    CHECK(delta_T(3, {2}, -1) == grq_of(g, {{1, 1}, {2, -4}}));
    CHECK_THROWS(delta_T(3, {3}, 0));
    CHECK(euler_factor_group(3, 2, 0) == grq_of(g, {{1, 1}, {2, -1}}));
    CHECK(euler_factor_group(3, 2, -1) == grq_of(g, {{1, 1}, {2, -2}}));
    CHECK_THROWS(euler_factor_group(3, 3, 0));
}

TEST_CASE("theta spot values") {
    GroupPtr g3 = unit_group(3);
    CHECK(theta(3, minimal_S(3), {}, 0).value == grq_of(g3, {{1, {1, 6}}, {2, {-1, 6}}}));
    CHECK(theta(3, minimal_S(3), {2}, 0).value == grq_of(g3, {{1, {1, 2}}, {2, {-1, 2}}}));
    GroupPtr g1 = unit_group(1);
    CHECK(theta(1, minimal_S(1, {5}), {}, -1).value == grq_scalar(g1, Rational(1, 3)));
}

TEST_CASE("theta admissibility") {
    PlaceSet no3;
    no3.infinite = true;
    CHECK_THROWS(theta(3, no3, {}, 0));          // missing ramified prime
    CHECK_THROWS(theta(3, minimal_S(3), {3}, 0));  // S and T meet
    CHECK_THROWS(theta(3, minimal_S(3), {}, 1));   // positive weight
}

TEST_CASE("factorization theta_{S,T} = delta_T * theta_S") {
    for (long f : {5L, 9L, 12L})
        for (long t : {7L, 11L})
            for (long j : {0L, -1L, -2L}) {
                auto with_t = theta(f, minimal_S(f), {t}, j);
                auto base = theta(f, minimal_S(f), {}, j);
                CHECK(with_t.value == delta_T(f, {t}, j) * base.value);
            }
}

TEST_CASE("S-enlargement multiplies by the Euler factor") {
    for (long j : {0L, -1L, -3L}) {
        auto big = theta(5, minimal_S(5, {3}), {}, j);
        auto base = theta(5, minimal_S(5), {}, j);
        CHECK(big.value == euler_factor_group(5, 3, j) * base.value);
    }
}

TEST_CASE("corestriction compatibility") {
    const std::pair<long, long> towers[] = {{3, 9}, {5, 15}, {4, 12}};
    for (auto [f, fp] : towers)
        for (long j = 0; j >= -4; --j) {
            auto up = theta(fp, minimal_S(fp), {}, j);
            GRQ down = project_to_level(up.value, f);
            GRQ expect = theta(f, minimal_S(f), {}, j).value;
            for (long ell = 2; ell <= fp; ++ell) {
                bool in_up = fp % ell == 0, in_low = f % ell == 0;
                // prime factors of f' not dividing f contribute Euler factors
                bool is_prime = ell >= 2;
                for (long d = 2; d * d <= ell; ++d)
                    if (ell % d == 0) is_prime = false;
                if (is_prime && in_up && !in_low) expect = euler_factor_group(f, ell, j) * expect;
            }
            CHECK(down == expect);
        }
}

TEST_CASE("minus-part L-values do not vanish") {
    for (long f : {5L, 7L, 9L, 12L})
        for (long j = -1; j >= -6; --j)
            for (const auto& chi : characters(unit_group(f))) {
                bool minus = chi.is_odd() == (j % 2 == 0);
                if (!minus) continue;
                CHECK(!l_value(chi.inverse().primitive_core(), j).is_zero());
            }
}
