#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "pim/numtheory.hpp"

using namespace pim;

TEST_CASE("prime sieve") {
    auto ps = primes_up_to(30);
    CHECK(ps == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
}

TEST_CASE("lcm_upto increments only at prime powers") {
    CHECK(lcm_upto(0) == 1);
    CHECK(lcm_upto(1) == 1);
    CHECK(lcm_upto(10) == 2520);
    Int prev = 1;
    for (long m = 2; m <= 200; ++m) {
        Int cur = lcm_upto(m);
        if (cur != prev) {
            // m must be p^k and the jump factor exactly p
            Int ratio = cur / prev;
            CHECK(cur % prev == 0);
            long p = ratio.get_si();
            long mm = m;
            while (mm % p == 0) mm /= p;
            CHECK(mm == 1);
        }
        prev = cur;
    }
}

TEST_CASE("saving prime sets at known indices") {
    SavingData s7 = prime_set_P(7);
    CHECK(s7.primes_P == std::vector<long>{11, 13});
    CHECK(s7.phi == 143);
    SavingData s10 = prime_set_P(10);
    CHECK(s10.primes_P == std::vector<long>{17, 19});
    CHECK(s10.phi == 17 * 19);
    CHECK(s10.L * s10.phi == s10.lcm4n);
}

TEST_CASE("phi divides lcm(1..4n) with multiplicity one") {
    for (long n = 1; n <= 2000; n += (n < 50 ? 1 : 97)) {
        SavingData s = prime_set_P(n);
        CHECK(s.lcm4n % s.phi == 0);
        for (long p : s.primes_P) {
            CHECK(Int(p) * Int(p) > 3 * n);
            CHECK(padic_order(s.phi, p) == 1);
        }
    }
}

TEST_CASE("phi limit closed form vs digamma route") {
    Real a = phi_limit(48), b = phi_limit_digamma(48);
    Real diff = abs(a - b);
    Real tol(48);
    mpfr_set_str(tol.raw(), "1e-40", 10, MPFR_RNDN);
    CHECK(diff < tol);
    CHECK(std::abs(a.to_double() - 0.64527561) < 5e-9);
}

TEST_CASE("phi growth converges to the limit") {
    PhiGrowth g = phi_growth(5000, 4999);
    REQUIRE(!g.samples.empty());
    auto [n, val] = g.samples.back();
    CHECK(n == 5000);
    CHECK(std::abs(val - g.limit) < 0.05);
    CHECK(std::abs(g.limit - 0.6452756) < 1e-6);
}
