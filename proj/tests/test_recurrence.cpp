#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pim/linforms.hpp"
#include "pim/recurrence.hpp"

using namespace pim;

static std::vector<Rat> classic_terms(long count, bool want_a) {
    std::vector<Rat> out;
    FormOptions fo{.check_two_routes = false};
    for (long n = 0; n < count; ++n) {
        LinearForm f = linear_form(n, fo);
        out.push_back(want_a ? f.a : f.b);
    }
    return out;
}

TEST_CASE("textbook recurrences") {
    std::vector<Rat> geo, fact, con, alt;
    Rat g = 1, f = 1;
    for (long n = 0; n < 40; ++n) {
        geo.push_back(g);
        g *= 2;
        fact.push_back(f);
        f *= (n + 1);
        con.push_back(Rat(5, 7));
        alt.push_back(n % 2 ? Rat(-3) : Rat(3));
    }

    auto rg = guess(geo);
    REQUIRE(rg);
    CHECK(rg->order == 1);
    CHECK(rg->coeff_degree() == 0);
    // u_{n+1} - 2 u_n, up to global sign
    Rat ratio = rg->coeff_at(0, 5) / rg->coeff_at(1, 5);
    CHECK(ratio == -2);

    auto rf = guess(fact);
    REQUIRE(rf);
    CHECK(rf->order == 1);
    CHECK(rf->coeff_degree() == 1);
    CHECK(rf->annihilates(fact));

    auto rc = guess(con);
    REQUIRE(rc);
    CHECK(rc->order == 1);
    CHECK(rc->coeff_degree() == 0);

    auto ra = guess(alt);
    REQUIRE(ra);
    CHECK(ra->order == 1);
}

TEST_CASE("u_{n+2} - u_n found at order 2") {
    std::vector<Rat> terms;
    for (long n = 0; n < 40; ++n) terms.push_back(n % 2 ? Rat(11) : Rat(4));
    auto r = guess(terms);
    REQUIRE(r);
    CHECK(r->order == 2);
    CHECK(r->coeff_degree() == 0);
    CHECK(r->coeff_at(1, 3) == 0);
    CHECK(r->coeff_at(2, 3) == -r->coeff_at(0, 3));
}

TEST_CASE("too few or unstructured terms give nullopt") {
    std::vector<Rat> rnd;
    Int seed = 1;
    for (long n = 0; n < 30; ++n) {
        seed = seed * 1103515245 + 12345;
        rnd.push_back(Rat(seed % 1000003, n + 1));
    }
    CHECK_FALSE(guess(rnd, {.r_max = 2, .d_max = 3}));
    CHECK_FALSE(guess(std::vector<Rat>{Rat(1), Rat(2)}));
}

TEST_CASE("classic b-sequence: order 3, frozen indicial polynomial") {
    std::vector<Rat> bs = classic_terms(60, false);
    auto rec = guess(bs);
    REQUIRE(rec);
    CHECK(rec->order == 3);
    CHECK(rec->annihilates(bs));
    std::vector<Int> ind = indicial_polynomial(*rec);
    std::vector<Int> want = {-2048, 138304, -2359989, 108};
    CHECK(ind == want);
}

TEST_CASE("a and b satisfy the same recurrence") {
    std::vector<Rat> as = classic_terms(60, true);
    std::vector<Rat> bs = classic_terms(60, false);
    auto ra = guess(as), rb = guess(bs);
    REQUIRE(ra);
    REQUIRE(rb);
    CHECK(ra->order == rb->order);
    CHECK(ra->p == rb->p);  // both content-normalized
    CHECK(ra->annihilates(bs));
    CHECK(rb->annihilates(as));
}

TEST_CASE("guessed recurrence annihilates 20 fresh terms") {
    std::vector<Rat> bs = classic_terms(80, false);
    std::vector<Rat> train(bs.begin(), bs.begin() + 60);
    auto rec = guess(train);
    REQUIRE(rec);
    CHECK(rec->annihilates(bs));
}

TEST_CASE("extend reproduces training terms and matches direct construction") {
    std::vector<Rat> bs = classic_terms(60, false);
    auto rec = guess(bs);
    REQUIRE(rec);
    std::vector<Rat> seed(bs.begin(), bs.begin() + rec->order);
    std::vector<Rat> ext = extend(*rec, seed, 59);
    CHECK(ext == bs);
}

TEST_CASE("Poincare-Perron ratio approaches the top indicial root") {
    std::vector<Rat> bs = classic_terms(60, false);
    auto rec = guess(bs);
    REQUIRE(rec);
    std::vector<Rat> ext = extend(*rec, bs, 201);
    double ratio = Rat(ext[201] / ext[200]).get_d();
    CHECK(std::abs(std::abs(ratio) - 21851.691396) / 21851.691396 < 0.01);
}

TEST_CASE("extension faults on a vanishing leading coefficient") {
    // p_1(n) = n - 4 vanishes at the step computing u_5
    PRecurrence rec;
    rec.order = 1;
    rec.p = {{Int(1)}, {Int(-4), Int(1)}};
    std::vector<Rat> seed = {Rat(1)};
    CHECK_THROWS_AS(extend(rec, seed, 10), singular_step_error);
    try {
        extend(rec, seed, 10);
    } catch (const singular_step_error& e) {
        CHECK(e.n == 4);
    }
}

TEST_CASE("json round trip") {
    std::vector<Rat> bs = classic_terms(60, false);
    auto rec = guess(bs);
    REQUIRE(rec);
    PRecurrence back = PRecurrence::from_json(rec->to_json());
    CHECK(back.order == rec->order);
    CHECK(back.p == rec->p);
    CHECK(back.window_lo == rec->window_lo);
    CHECK(back.window_hi == rec->window_hi);
    CHECK(back.annihilates(bs));
}
