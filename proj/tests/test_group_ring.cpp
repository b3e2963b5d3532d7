#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "zgu/group_ring.hpp"

using namespace zgu;

TEST_CASE("convolution basics in C4") {
    GroupRingElement g({4});
    g.set_coeff({1}, 1);  // the generator
    GroupRingElement gg = g * g;
    CHECK(gg.coeff({2}) == 1);
    CHECK(gg.coeff({0}) == 0);
    CHECK(g.pow(4).coeff({0}) == 1);
    CHECK(g.pow(4).augmentation() == 1);

    GroupRingElement u({4});
    u.set_coeff({0}, 2);
    u.set_coeff({1}, -1);
    CHECK(u.augmentation() == 1);
    // (2 - g)^2 = 4 - 4g + g^2
    GroupRingElement sq = u.pow(2);
    CHECK(sq.coeff({0}) == 4);
    CHECK(sq.coeff({1}) == -4);
    CHECK(sq.coeff({2}) == 1);
    CHECK(sq.augmentation() == 1);
}

TEST_CASE("multiplication is commutative and exponents normalize") {
    GroupRingElement a({2, 4}), b({2, 4});
    a.set_coeff({1, 3}, 2);
    a.set_coeff({0, 1}, -1);
    b.set_coeff({1, 0}, 3);
    b.set_coeff({0, 2}, 5);
    GroupRingElement ab = a * b, ba = b * a;
    CHECK(ab.coeffs() == ba.coeffs());
    // {3, 7} normalizes to {1, 3}
    GroupRingElement c({2, 4});
    c.set_coeff({3, 7}, 1);
    CHECK(c.coeff({1, 3}) == 1);
}

TEST_CASE("augmentation is multiplicative") {
    GroupRingElement a({6}), b({6});
    a.set_coeff({0}, 1);
    a.set_coeff({2}, -2);
    a.set_coeff({5}, 4);
    b.set_coeff({1}, 7);
    b.set_coeff({3}, -6);
    CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
    CHECK(a.pow(3).augmentation() == 27);
}

TEST_CASE("u = 1 - g + g^2 in C7: squaring is not the pushed power map") {
    // In C7 every class is a singleton, so the class-sums of u^2 are just its
    // coefficients, while pushing u's coefficients through x -> x^2 moves the
    // coefficient at g^k to g^{2k}.  The two disagree.
    GroupRingElement u({7});
    u.set_coeff({0}, 1);
    u.set_coeff({1}, -1);
    u.set_coeff({2}, 1);
    CHECK(u.augmentation() == 1);

    GroupRingElement sq = u.pow(2);
    // (1 - g + g^2)^2 = 1 - 2g + 3g^2 - 2g^3 + g^4
    CHECK(sq.coeff({0}) == 1);
    CHECK(sq.coeff({1}) == -2);
    CHECK(sq.coeff({2}) == 3);
    CHECK(sq.coeff({3}) == -2);
    CHECK(sq.coeff({4}) == 1);

    std::map<long, long long> pushed;
    for (long k = 0; k < 7; ++k) pushed[(2 * k) % 7] += u.coeff({k});
    bool violated = false;
    for (long k = 0; k < 7; ++k)
        if (sq.coeff({k}) != pushed[k]) violated = true;
    CHECK(violated);
}
