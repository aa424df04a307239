#include <doctest.h>

#include <random>

#include "eqlv/congruences.hpp"
#include "test_util.hpp"

using namespace eqlv;
using namespace eqlv::testutil;

TEST_CASE("reduce_mod basics") {
    GroupPtr g = unit_group(3);
    GRQ x = grq_of(g, {{1, {1, 2}}, {2, {-1, 2}}});
    GRZ r = reduce_mod(x, 3, 1);
    CHECK(r.coeff(g->index_of_label(1)).value() == 2);
    CHECK(r.coeff(g->index_of_label(2)).value() == 1);
    GRQ bad = grq_of(g, {{1, {1, 3}}});
    CHECK_THROWS_WITH_AS(reduce_mod(bad, 3, 1), doctest::Contains("not p-integral"),
                         std::domain_error);
    CHECK(reduce_mod(grq_zero(g), 5, 2).is_zero());
}

TEST_CASE("reduce_mod is multiplicative") {
    std::mt19937 rng(23);
    GroupPtr g = unit_group(5);
    for (int t = 0; t < 20; ++t) {
        GRQ x = random_grq(rng, g), y = random_grq(rng, g);
        try {
            GRZ lhs = reduce_mod(x * y, 3, 2);
            CHECK(lhs == reduce_mod(x, 3, 2) * reduce_mod(y, 3, 2));
        } catch (const std::domain_error&) {
            // a denominator hit 3; both sides undefined, nothing to check
        }
    }
}

TEST_CASE("twist operator") {
    GroupPtr g9 = unit_group(9);
    GRZ x = GRZ::basis(g9, g9->index_of_label(2), Zmod(1, 9), Zmod(0, 9));
    GRZ tw = twist(1, x, 3, 2);
    CHECK(tw.coeff(g9->index_of_label(2)).value() == 2);
    CHECK(twist(0, x, 3, 2) == x);
    CHECK_THROWS_WITH_AS(twist(1, x, 5, 1), doctest::Contains("cyclotomic character"),
                         std::domain_error);

    // Fermat: tw_4 is the identity when p=5, n=1
    GroupPtr g5 = unit_group(5);
    std::mt19937 rng(29);
    GRZ y = random_grz(rng, g5, 5);
    CHECK(twist(4, y, 5, 1) == y);

    // multiplicativity and composition
    for (int t = 0; t < 20; ++t) {
        GRZ a = random_grz(rng, g9, 9), b = random_grz(rng, g9, 9);
        CHECK(twist(2, a * b, 3, 2) == twist(2, a, 3, 2) * twist(2, b, 3, 2));
        CHECK(twist(1, twist(2, a, 3, 2), 3, 2) == twist(3, a, 3, 2));
    }
}

TEST_CASE("twist moves parity idempotents") {
    GroupPtr g = unit_group(9);
    for (long j : {0L, -1L, -2L, -3L})
        for (long a : {1L, 2L, 3L}) {
            GRZ ej = reduce_mod(parity_idempotent(g, j, -1), 3, 2);
            GRZ eja = reduce_mod(parity_idempotent(g, j + a, -1), 3, 2);
            CHECK(twist(a, ej, 3, 2) == eja);
        }
}

TEST_CASE("parity idempotents") {
    GroupPtr g = unit_group(3);
    CHECK(parity_idempotent(g, 0, 1) == grq_of(g, {{1, {1, 2}}, {2, {1, 2}}}));
    CHECK(parity_idempotent(g, 1, 1) == grq_of(g, {{1, {1, 2}}, {2, {-1, 2}}}));
    for (long f : {3L, 5L, 7L})
        for (long j : {0L, 1L, 4L, -3L}) {
            GroupPtr gg = unit_group(f);
            GRQ plus = parity_idempotent(gg, j, 1), minus = parity_idempotent(gg, j, -1);
            CHECK(plus + minus == grq_scalar(gg, 1));
            CHECK(plus * plus == plus);
            CHECK(minus * minus == minus);
            CHECK(minus == parity_idempotent(gg, j + 1, 1));
            CHECK(plus == parity_idempotent(gg, j + 2, 1));
        }
    CHECK_THROWS_WITH_AS(parity_idempotent(unit_group(2), 0, 1),
                         doctest::Contains("no complex conjugation"), std::domain_error);
}

TEST_CASE("Kummer congruence checks") {
    auto r = verify_kummer(5, 1, -1, -5);
    CHECK(r.status == Status::verified);
    CHECK(r.witness == "2 vs 2 mod 5");
    // 1-(-3) = 4 = 0 mod (p-1): von Staudt-Clausen puts 5 into the
    // denominator of zeta(-3), so the pair is inadmissible
    CHECK(verify_kummer(5, 1, -3, -7).status == Status::skipped);
    CHECK(verify_kummer(7, 1, -1, -7).status == Status::verified);
    CHECK(verify_kummer(7, 2, -3, -45).status == Status::verified);
    CHECK(verify_kummer(5, 1, -1, -1).status == Status::verified);
    // precondition violations skip rather than fail
    CHECK(verify_kummer(5, 1, -1, -3).status == Status::skipped);   // j != k mod 4
    CHECK(verify_kummer(5, 1, -11, -11).status == Status::skipped); // 1-j = 12 = 0 mod 4
    CHECK(verify_kummer(5, 1, -2, -2).status == Status::skipped);   // even j
    CHECK(verify_kummer(4, 1, -1, -1).status == Status::skipped);   // even p
}

TEST_CASE("minus-part Deligne-Ribet congruence spot checks") {
    CHECK(verify_minus_congruence(9, 3, 1, minimal_S(9), {2}, 0, -2).status == Status::verified);
    CHECK(verify_minus_congruence(5, 5, 1, minimal_S(5), {3}, -1, -5).status == Status::verified);
    CHECK(verify_minus_congruence(9, 3, 2, minimal_S(9), {2}, -1, -7).status == Status::verified);
    // j = k is trivially verified
    CHECK(verify_minus_congruence(9, 3, 1, minimal_S(9), {2}, -1, -1).status == Status::verified);
    // p^n must divide f
    CHECK(verify_minus_congruence(5, 3, 1, minimal_S(5), {2}, 0, -2).status == Status::skipped);
}

TEST_CASE("delta and Euler factor twist identities") {
    CHECK(verify_delta_twist(9, 3, 2, {2}, 0, -6, {2, 7, 11}).status == Status::verified);
    CHECK(verify_delta_twist(5, 5, 1, {7}, -1, -5, {2, 3}).status == Status::verified);
    CHECK(verify_delta_twist(9, 3, 1, {}, 0, -2, {}).status == Status::verified);
    CHECK(verify_delta_twist(9, 3, 1, {3}, 0, -2, {}).status == Status::skipped);
}

TEST_CASE("p-integrality") {
    CHECK(verify_integrality(3, 5, minimal_S(3, {5}), {2}, 0).status == Status::verified);
    auto bad = verify_integrality(3, 3, minimal_S(3), {}, 0);
    CHECK(bad.status == Status::failed);
    CHECK(bad.witness.find("not p-integral") != std::string::npos);
}

TEST_CASE("sweep plumbing") {
    SweepGrid empty;
    CHECK(sweep(empty).empty());

    SweepGrid small;
    small.f_values = {9};
    small.n_values = {1};
    small.j_values = {0, -1};
    small.k_values = {0, -1};
    small.t_primes = {2};
    auto reports = sweep(small);
    CHECK(!reports.empty());
    for (const auto& r : reports) CHECK(r.status == Status::verified);

    small.inject_fault = true;
    auto faulty = sweep(small);
    int failed = 0;
    for (const auto& r : faulty)
        if (r.status == Status::failed) ++failed;
    CHECK(failed == 1);
}
