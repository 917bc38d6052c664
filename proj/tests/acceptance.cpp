// End-to-end acceptance checks, one numbered line each.  Heavier than the unit
// suites; the full family scan only runs when PIM_FULL_SCAN=1 is set.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "pim/asymptotics.hpp"
#include "pim/familysearch.hpp"
#include "pim/linforms.hpp"
#include "pim/recurrence.hpp"

using namespace pim;

static int failures = 0;

static void report(int idx, const char* title, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d %-28s %s%s%s\n", idx, title, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

static bool close(double x, double target, double tol) { return std::abs(x - target) < tol; }

int main() {
    FormOptions fast{.check_two_routes = false};

    // 1: closed form at n = 0
    {
        LinearForm f = linear_form(0);
        report(1, "closed form I_0 = pi/4", f.a == 0 && f.b == Rat(1, 4));
    }

    // 2: Proposition 1 integrality for n = 1..40
    {
        bool ok = true;
        long bad = 0;
        for (long n = 1; n <= 40 && ok; ++n) {
            Certificate c = verify_prop1(n);
            if (!c.pass) { ok = false; bad = n; }
        }
        report(2, "proposition 1, n <= 40", ok, ok ? "" : "first failure n=" + std::to_string(bad));
    }

    // 3: lemma certificates
    {
        bool ok = true;
        std::string detail;
        auto need = [&](const Certificate& c) {
            if (!c.pass && ok) {
                ok = false;
                detail = c.lemma + " n=" + std::to_string(c.n) + " at " + c.first_counterexample;
            }
        };
        for (long n = 1; n <= 25; ++n) need(verify_lemma(1, n));
        for (long n : {10L, 16L, 25L, 40L}) need(verify_lemma(2, n));
        for (long n = 1; n <= 25; ++n) need(verify_lemma(3, n));
        for (long n = 1; n <= 12; ++n) need(verify_lemma(4, n));
        // honest failure: the lemma-4 exponent overshoots by one power of two
        // at even n (first counterexample B_0 at n = 2); odd n all pass, and
        // the downstream integrality (criterion 2) is unaffected because
        // lcm(1..4n) absorbs the missing factor
        if (!ok) detail += " (lemma 4 exponent unattainable at even n)";
        report(3, "lemma certificates 1-4", ok, detail);
    }

    // 4: oracle triangle
    {
        bool ok = true;
        for (long n = 1; n <= 4 && ok; ++n) {
            IntegrandParams p = IntegrandParams::classic(n);
            LaurentTable t = laurent_coeffs(p);
            for (long j = p.j_min(); j <= p.j_max() && ok; ++j)
                ok = t.a(j) == aj_multiindex_oracle(n, j) &&
                     t.a(j) == aj_hypergeometric_oracle(n, j);
        }
        report(4, "A_j oracle triangle, n <= 4", ok);
    }

    // 5: recurrence recovery and extension to n = 120
    std::vector<Rat> as, bs;
    std::optional<PRecurrence> rec;
    {
        for (long n = 0; n < 60; ++n) {
            LinearForm f = linear_form(n, fast);
            as.push_back(f.a);
            bs.push_back(f.b);
        }
        rec = guess(bs);
        bool ok = rec && rec->order == 3;
        if (ok) {
            std::vector<Int> want = {-2048, 138304, -2359989, 108};
            ok = indicial_polynomial(*rec) == want;
        }
        if (ok) {
            std::vector<Rat> bext = extend(*rec, bs, 120);
            // direct b_n from a single Laurent coefficient per index
            for (long n = 60; n <= 120 && ok; ++n) {
                Rat a0 = laurent_coeffs(IntegrandParams::classic(n), 0, 0).a(0);
                Rat b_direct = (n % 2 ? Rat(-1) : Rat(1)) * a0 / 2;
                ok = bext[static_cast<size_t>(n)] == b_direct;
            }
            // full direct form at the endpoint covers a_n as well
            if (ok) {
                LinearForm f120 = linear_form(120, fast);
                std::vector<Rat> aext = extend(*rec, as, 120);
                ok = aext[120] == f120.a && bext[120] == f120.b;
            }
        }
        report(5, "order-3 recurrence to n=120", ok);
    }

    // 6: asymptotic constants
    {
        AsymptoticData d = asymptotic_data(64);
        // tolerance: one ulp of the quoted digits
        bool ok = close(abs(d.N_roots[0]).to_double(), 0.029458495928, 1e-12) &&
                  close(d.N_roots[2].re.to_double(), 21851.691396, 1e-6) &&
                  close(d.y_roots[2].re.to_double(), 66.33950152, 1e-8) &&
                  close(g_saddle(d.y_roots[2], 64).re.to_double(), 21851.691396, 1e-6) &&
                  close(d.phi_limit.to_double(), 0.64527561, 1e-8);
        report(6, "asymptotic constants", ok);
    }

    // 7: the measure bound
    {
        auto [rI, rb] = rates(64);
        auto [mu, crude] = measure_bounds(64);
        (void)crude;
        bool ok = close(rI.to_double(), -1.90291648559998, 1e-12) &&
                  close(rb.to_double(), 11.613890045331, 1e-11) &&
                  mu.str(30).substr(0, 31) == "7.10320533413700172750577342281";
        report(7, "mu_bound to 25 digits", ok, mu.str(25));
    }

    // 8: crude bound without the prime saving
    {
        auto [mu, crude] = measure_bounds(64);
        (void)mu;
        bool ok = close(crude.to_double(), 10.747747465671804677, 1e-14 * 10.7);
        report(8, "crude bound", ok, crude.str(20));
    }

    // 9: quadrature consistency and trivial bound
    {
        bool ok = true;
        for (long n = 0; n <= 15 && ok; ++n) {
            // a_n, b_n grow like e^{11.6 n} and cancel to e^{-1.9 n}, so the
            // working precision must grow with n to resolve the difference
            long digits = 64 + 6 * n;
            mpfr_prec_t prec = bits_for_digits(digits);
            Real pi = Real::pi(prec);
            Real tol40(prec);
            mpfr_set_str(tol40.raw(), "1e-40", 10, MPFR_RNDN);
            LinearForm f = linear_form(n, fast);
            Complex q = contour_integral(IntegrandParams::classic(n), digits);
            Real exact = Real(f.a, prec) + Real(f.b, prec) * pi;
            ok = (abs(q.re - exact) + abs(q.im)) < tol40;
        }
        for (long n = 16; n <= 20 && ok; ++n) {
            mpfr_prec_t prec = bits_for_digits(64 + 6 * n);
            LinearForm f = linear_form(n, fast);
            ok = abs(Real(f.a, prec) + Real(f.b, prec) * Real::pi(prec)) < Real(1L, prec);
        }
        report(9, "quadrature, n <= 15", ok);
    }

    // 10: delta at n = 200 (scaled-form delta; the gcd-reduced empirical delta
    // converges to the same limit from above but is still 0.179 at n = 200)
    {
        bool ok = false;
        std::string detail = "no recurrence";
        if (rec) {
            std::vector<Rat> aext = extend(*rec, as, 200);
            std::vector<Rat> bext = extend(*rec, bs, 200);
            LinearForm f200;
            f200.n = 200;
            f200.a = aext[200];
            f200.b = bext[200];
            DeltaResult d = delta_scaled(scale_classic(f200));
            ok = d.defined && close(d.delta, 0.163848, 0.01);
            char buf[64];
            std::snprintf(buf, sizeof buf, "delta=%.6f", d.delta);
            detail = buf;
        }
        report(10, "delta(200) near 0.163848", ok, detail);
    }

    // 11: family scan.  Smoke window always runs; the published-window scan
    // needs B_MAX = 13 to contain (8,13) and runs with PIM_FULL_SCAN=1.
    {
        ScanReport rep = best_ab(4, 6, 90, 100, {});
        double d23 = 0, d35 = 0;
        for (const auto& f : rep.families) {
            if (f.key == FamilyKey{2, 3}) d23 = f.min_delta;
            if (f.key == FamilyKey{3, 5}) d35 = f.min_delta;
        }
        // (4,6) is the (2,3) integrand at doubled index and may sit above
        // (2,3) on this window; the check required here is (2,3) > (3,5)
        bool ok = !rep.ranking.empty() && d23 > 0 && d23 > d35;
        char buf[96];
        std::snprintf(buf, sizeof buf, "smoke(4,6,90,100): (2,3)=%.5f (3,5)=%.5f", d23, d35);
        std::string detail = buf;

        const char* full = std::getenv("PIM_FULL_SCAN");
        if (full && std::strcmp(full, "1") == 0) {
            // the A = 8 rows carry coefficient polynomials of degree near 90
            ScanOptions wide;
            wide.guess_opts.d_max = 110;
            wide.terms_max = 457;
            wide.terms_step = 101;
            ScanReport big = best_ab(10, 13, 290, 300, wide);
            std::vector<FamilyKey> want = {{2, 3}, {3, 5}, {5, 8}, {8, 13}, {7, 10}};
            std::vector<double> target = {0.16605428729395818514, 0.15727140930557009691,
                                          0.15701995819256081077, 0.15586354092162189848,
                                          0.12451550531454231901};
            // scalar multiples such as (4,6) = 2*(2,3) rescan the same
            // integrand at doubled index and are not separate families;
            // compare the relative order of the five target keys
            std::vector<FamilyKey> got;
            for (const auto& k : big.ranking)
                for (const auto& w : want)
                    if (k == w) got.push_back(k);
            ok = ok && got == want;
            for (size_t i = 0; i < 5 && ok; ++i)
                for (const auto& f : big.families)
                    if (f.key == want[i]) ok = ok && close(f.min_delta, target[i], 0.01);
            detail += ok ? "; full scan top five reproduced" : "; full scan mismatch";
        } else {
            detail += "; full scan skipped (set PIM_FULL_SCAN=1)";
        }
        report(11, "family scan ranking", ok, detail);
    }

    // 12: property suites run under ctest; re-run a cheap cross-section here
    {
        bool ok = true;
        for (long N = 0; N <= 8 && ok; ++N)
            for (long M = 0; M <= 8 && ok; ++M)
                ok = super_catalan(N, M) == super_catalan_vonszily(N, M);
        LinearForm f5 = linear_form(5);  // two-route agreement is internal here
        ok = ok && f5.route_tag == "dual";
        DeltaResult base = delta_empirical(f5);
        DeltaResult scl = delta_empirical(Rat(f5.a * Rat(7, 3)), Rat(f5.b * Rat(7, 3)));
        ok = ok && std::abs(base.delta - scl.delta) < 1e-12;
        auto roots = poly_roots({Rat(1), Rat(0), Rat(1)}, 48);
        ok = ok && roots.size() == 2 && (roots[0].im + roots[1].im).is_zero();
        report(12, "property cross-section", ok);
    }

    std::printf("%s (%d failure%s)\n", failures ? "ACCEPTANCE FAIL" : "ACCEPTANCE PASS", failures,
                failures == 1 ? "" : "s");
    return failures ? 1 : 0;
}
