#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>
#include <random>

#include "zgu/cyclotomic.hpp"
#include "zgu/errors.hpp"
#include "zgu/numth.hpp"

using namespace zgu;

static Cyclotomic zeta(long n, long long e) { return Cyclotomic::root_of_unity(n, e); }

TEST_CASE("rationals embed at conductor 1") {
    Cyclotomic a = Cyclotomic::rational(Rat(3, 2));
    CHECK(a.conductor() == 1);
    CHECK(a.is_rational());
    CHECK(a.rational_value() == Rat(3, 2));
    CHECK(Cyclotomic().is_zero());
    CHECK(Cyclotomic::integer(0).is_zero());
    CHECK((a + Cyclotomic::rational(Rat(-3, 2))).is_zero());
}

TEST_CASE("roots of unity satisfy their defining relations") {
    for (long n : {1L, 2L, 3L, 4L, 6L, 8L, 12L, 30L}) {
        CHECK(zeta(n, 0) == Cyclotomic::integer(1));
        CHECK(zeta(n, 1).pow(n) == Cyclotomic::integer(1));
        CHECK(zeta(n, 1).pow(n - 1) == zeta(n, -1));
        // negative exponents reduce mod n
        CHECK(zeta(n, -3) == zeta(n, n - 3));
    }
    // vanishing sums: 1 + zeta_p + ... + zeta_p^{p-1} = 0
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        Cyclotomic s;
        for (long e = 0; e < p; ++e) s = s + zeta(p, e);
        CHECK(s.is_zero());
    }
}

TEST_CASE("equality is independent of the conductor used to build a value") {
    CHECK(zeta(6, 2) == zeta(3, 1));
    CHECK(zeta(4, 2) == Cyclotomic::integer(-1));
    CHECK(zeta(8, 2) == zeta(4, 1));
    CHECK(zeta(12, 6) == Cyclotomic::integer(-1));
    CHECK(zeta(6, 1) != zeta(6, 5));
    // zeta_6 = -zeta_3^2
    CHECK(zeta(6, 1) == -zeta(3, 2));
}

TEST_CASE("canonicalize reduces modulo the cyclotomic polynomial") {
    // zeta_5^4 = -(1 + zeta + zeta^2 + zeta^3)
    Cyclotomic direct = Cyclotomic::canonicalize(5, {{4, Rat(1)}});
    Cyclotomic sum;
    for (long e = 0; e < 4; ++e) sum = sum + zeta(5, e);
    CHECK(direct == -sum);
    // high powers reduce: zeta_5^{13} = zeta_5^3
    CHECK(Cyclotomic::canonicalize(5, {{13, Rat(1)}}) == zeta(5, 3));
    // mixed terms collapse
    Cyclotomic z = Cyclotomic::canonicalize(3, {{0, Rat(1)}, {1, Rat(1)}, {2, Rat(1)}});
    CHECK(z.is_zero());
}

TEST_CASE("arithmetic mixes conductors via the lcm") {
    Cyclotomic a = zeta(3, 1), b = zeta(4, 1);
    Cyclotomic p = a * b;
    CHECK(p == zeta(12, 7));  // zeta_3 zeta_4 = zeta_12^{4+3}
    CHECK(a + b - b == a);
    CHECK((a - a).is_zero());
    CHECK(a.scaled(Rat(2)) == a + a);
}

TEST_CASE("galois automorphisms") {
    Cyclotomic a = zeta(7, 1) + zeta(7, 6);  // fixed by complex conjugation
    CHECK(a.galois(-1) == a);
    CHECK(zeta(7, 1).galois(3) == zeta(7, 3));
    // sigma_k is multiplicative on values
    Cyclotomic v = zeta(7, 1) + Cyclotomic::integer(2) * zeta(7, 3);
    CHECK((v * v).galois(2) == v.galois(2) * v.galois(2));
    CHECK_THROWS_AS(zeta(6, 1).galois(2), InvalidAutomorphismError);
    CHECK_THROWS_AS(zeta(6, 1).galois(3), InvalidAutomorphismError);
}

TEST_CASE("traces") {
    // Tr_{Q(zeta_p)/Q}(zeta_p) = -1
    for (long p : {3L, 5L, 7L}) CHECK(zeta(p, 1).trace_to_rationals(p) == Rat(-1));
    // trace of a rational over Q(zeta_m) is phi(m) times the value
    CHECK(Cyclotomic::rational(Rat(5, 3)).trace_to_rationals(12) ==
          Rat(5, 3) * euler_phi(12));
    // Tr_{Q(zeta_12)/Q}(zeta_12) = 0 (mu(12) = 0)
    CHECK(zeta(12, 1).trace_to_rationals(12) == Rat(0));
    // values outside the subfield are rejected
    CHECK_THROWS_AS(zeta(5, 1).trace_to_rationals(3), NotInSubfieldError);
    CHECK_THROWS_AS(zeta(8, 1).trace_to_rationals(4), NotInSubfieldError);
    // but subfield members pass: zeta_8^2 lies in Q(zeta_4)
    CHECK(zeta(8, 2).trace_to_rationals(4) == Rat(0));
}

TEST_CASE("cyclotomic polynomials") {
    auto phi1 = Cyclotomic::cyclotomic_polynomial(1);
    CHECK(phi1 == std::vector<Int>{-1, 1});
    auto phi8 = Cyclotomic::cyclotomic_polynomial(8);
    CHECK(phi8 == std::vector<Int>{1, 0, 0, 0, 1});
    auto phi12 = Cyclotomic::cyclotomic_polynomial(12);
    CHECK(phi12 == std::vector<Int>{1, 0, -1, 0, 1});
    for (long n : {9L, 15L, 16L, 24L, 105L})
        CHECK(Cyclotomic::cyclotomic_polynomial(n).size() == size_t(euler_phi(n)) + 1);
}

TEST_CASE("conductor cap") {
    long save = Cyclotomic::conductor_cap();
    Cyclotomic::set_conductor_cap(16);
    CHECK_THROWS_AS(zeta(17, 1), InvalidConductorError);
    CHECK_THROWS_AS(zeta(5, 1) * zeta(7, 1), InvalidConductorError);
    Cyclotomic::set_conductor_cap(save);
    CHECK_NOTHROW(zeta(17, 1));
}

TEST_CASE("json round trip on random values") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> conductorPick(1, 24);
    std::uniform_int_distribution<long long> coef(-5, 5);
    for (int trial = 0; trial < 1000; ++trial) {
        long n = conductorPick(rng);
        std::vector<std::pair<long long, Rat>> terms;
        for (int t = 0; t < 4; ++t)
            terms.push_back({std::uniform_int_distribution<long long>(0, 2 * n)(rng),
                             Rat(coef(rng), 1 + (trial % 3))});
        Cyclotomic v = Cyclotomic::canonicalize(n, terms);
        Cyclotomic back = Cyclotomic::from_json(v.to_json());
        CHECK(back == v);
    }
}

TEST_CASE("galois orbit sums are rational") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        long n = std::uniform_int_distribution<long>(2, 20)(rng);
        Cyclotomic v = zeta(n, std::uniform_int_distribution<long>(0, n - 1)(rng)) +
                       zeta(n, std::uniform_int_distribution<long>(0, n - 1)(rng));
        Cyclotomic s;
        for (long k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) s = s + v.galois(k);
        CHECK(s.is_rational());
        CHECK(s.rational_value() == v.trace_to_rationals(n));
    }
}
