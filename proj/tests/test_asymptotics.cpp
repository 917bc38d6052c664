#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "pim/asymptotics.hpp"
#include "pim/linforms.hpp"
#include "pim/recurrence.hpp"

using namespace pim;

static std::vector<Rat> to_rat(const std::vector<Int>& v) {
    std::vector<Rat> out;
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

TEST_CASE("root finder on polynomials with known roots") {
    // (x-1)(x-2)(x-3)
    auto r = poly_roots(to_rat({Int(-6), Int(11), Int(-6), Int(1)}), 40);
    REQUIRE(r.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(r[i].re.to_double() - (i + 1)) < 1e-35);
        CHECK(r[i].im.is_zero());
    }
    // x^2 + 1: conjugate pair, exact symmetry
    auto c = poly_roots(to_rat({Int(1), Int(0), Int(1)}), 40);
    REQUIRE(c.size() == 2);
    CHECK(mpfr_equal_p(c[0].re.raw(), c[1].re.raw()));
    CHECK(mpfr_cmpabs(c[0].im.raw(), c[1].im.raw()) == 0);
    CHECK(c[0].im.sign() == -c[1].im.sign());
}

TEST_CASE("conjugate pairing of indicial roots") {
    auto r = poly_roots(to_rat(kIndicialClassic), 64);
    REQUIRE(r.size() == 3);
    // sorted by modulus: complex pair first, then the large real root
    CHECK(mpfr_equal_p(r[0].re.raw(), r[1].re.raw()));
    CHECK((r[0].im + r[1].im).is_zero());
    CHECK(r[2].im.is_zero());
}

TEST_CASE("asymptotic constants to published precision") {
    AsymptoticData d = asymptotic_data(64);
    double absN1 = abs(d.N_roots[0]).to_double();
    CHECK(absN1 == doctest::Approx(0.029458495928).epsilon(1e-10));
    CHECK(d.N_roots[2].re.to_double() == doctest::Approx(21851.691396).epsilon(1e-10));
    CHECK(d.y_roots[2].re.to_double() == doctest::Approx(66.33950152).epsilon(1e-9));
    CHECK(d.phi_limit.to_double() == doctest::Approx(0.64527561).epsilon(1e-8));
}

TEST_CASE("saddle values match indicial roots to 20 digits") {
    AsymptoticData d = asymptotic_data(64);
    mpfr_prec_t prec = bits_for_digits(64);
    Real tol(prec);
    mpfr_set_str(tol.raw(), "1e-20", 10, MPFR_RNDN);
    for (size_t j = 0; j < d.N_roots.size(); ++j) {
        Real rel = abs(d.g_values[j] - d.N_roots[j]) / abs(d.N_roots[j]);
        CHECK(rel < tol);
    }
}

TEST_CASE("rates and measure bounds digit-for-digit") {
    auto [rI, rb] = rates(64);
    CHECK(rI.to_double() == doctest::Approx(-1.90291648559998).epsilon(1e-13));
    CHECK(rb.to_double() == doctest::Approx(11.613890045331).epsilon(1e-13));
    auto [mu, crude] = measure_bounds(64);
    CHECK(mu.str(30).substr(0, 31) == "7.10320533413700172750577342281");
    CHECK(crude.to_double() == doctest::Approx(10.747747465671804677).epsilon(1e-15));
}

TEST_CASE("doubling precision preserves certified digits") {
    auto [mu64, crude64] = measure_bounds(64);
    auto [mu128, crude128] = measure_bounds(128);
    CHECK(abs(mu64 - mu128).to_double() < 1e-60);
    CHECK(abs(crude64 - crude128).to_double() < 1e-60);
    AsymptoticData d64 = asymptotic_data(64), d128 = asymptotic_data(128);
    CHECK(abs(d64.N_roots[2] - d128.N_roots[2]).to_double() < 1e-55);
}

TEST_CASE("quadrature against exact forms") {
    mpfr_prec_t prec = bits_for_digits(64);
    Real pi = Real::pi(prec);
    for (long n : {0L, 3L, 5L}) {
        LinearForm f = linear_form(n);
        Complex q = contour_integral(IntegrandParams::classic(n), 64);
        Real exact = Real(f.a, prec) + Real(f.b, prec) * pi;
        CHECK(abs(q.re - exact).to_double() < 1e-50);
        CHECK(abs(q.im).to_double() < 1e-50);
    }
}

TEST_CASE("empirical rates at n = 200") {
    FormOptions fo{.check_two_routes = false};
    std::vector<Rat> as, bs;
    for (long n = 0; n < 60; ++n) {
        LinearForm f = linear_form(n, fo);
        as.push_back(f.a);
        bs.push_back(f.b);
    }
    auto rec = guess(bs);
    REQUIRE(rec);
    auto aext = extend(*rec, as, 200);
    auto bext = extend(*rec, bs, 200);
    LinearForm f200;
    f200.n = 200;
    f200.a = aext[200];
    f200.b = bext[200];
    ScaledForm s = scale_classic(f200);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(
        mpz_sizeinbase(s.a_int.get_mpz_t(), 2) + 1024);
    Real eps = abs(Real(s.a_int, prec) + Real(s.b_int, prec) * Real::pi(prec));
    double rate_I_emp = log(eps).to_double() / 200.0;
    double rate_b_emp = log(abs(Real(s.b_int, prec))).to_double() / 200.0;
    auto [rI, rb] = rates(48);
    CHECK(std::abs(rate_I_emp - rI.to_double()) < 0.1);
    CHECK(std::abs(rate_b_emp - rb.to_double()) < 0.1);
}
