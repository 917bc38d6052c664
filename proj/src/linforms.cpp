#include "pim/linforms.hpp"

#include <stdexcept>

#include "pim/bigfloat.hpp"
#include "pim/gaussian.hpp"

namespace pim {

LinearForm assemble_form(const IntegrandParams& params, const FormOptions& opts) {
    if (!params.label) throw std::invalid_argument("assemble_form: params need a label index");
    const long n = params.label->n;
    const long v = params.v;
    const int sign = (n % 2 == 0) ? 1 : -1;  // (-1)^n

    LaurentTable table = laurent_coeffs(params);
    LinearForm f;
    f.n = n;
    f.b = Rat(sign) * table.a(0) / 2;

    // i * integral of P over the segment, (x+5)-basis route
    QPoly p_x5 = polypart_x5(params, table);
    Rat ip_x5 = 0;
    {
        GaussRat z{4, 2}, zk{1, 0};
        for (long k = 1; k <= p_x5.degree() + 1; ++k) {
            zk = zk * z;
            // i ((4+2i)^k - (4-2i)^k) = -2 Im((4+2i)^k)
            ip_x5 += p_x5.c[static_cast<size_t>(k - 1)] * Rat(-2) * zk.im / k;
        }
    }
    f.route_tag = "x5";
    if (opts.check_two_routes) {
        std::vector<GaussInt> Bk = polypart_gauss(params, p_x5, table);
        GaussRat acc{0, 0};
        GaussRat ik{1, 0};  // i^k
        Rat p4{4};          // 2^{2k+2}
        const GaussRat iunit{0, 1};
        for (size_t k = 0; k < Bk.size(); ++k) {
            acc = acc + GaussRat(Bk[k]) * ik * (p4 / Rat(static_cast<long>(k) + 1));
            ik = ik * iunit;
            p4 *= 4;
        }
        GaussRat ip_gauss = -acc;
        if (!ip_gauss.is_real())
            throw integrity_error("assemble_form: Gaussian-basis P integral not real");
        if (ip_gauss.re != ip_x5)
            throw integrity_error("assemble_form: P-integral route disagreement at n=" +
                                  std::to_string(n));
        f.route_tag = "dual";
    }

    // pole part without j = 0:
    // S = sum_{j>=1} A_j/j (1/(4-2i)^j - 1/(4+2i)^j - 1/(6+2i)^j + 1/(6-2i)^j);
    // the contribution is i*S which must be rational, i.e. Re S = 0.
    GaussRat S{0, 0};
    {
        GaussRat w1 = GaussRat{4, -2}.inv(), w2 = GaussRat{4, 2}.inv();
        GaussRat w3 = GaussRat{6, 2}.inv(), w4 = GaussRat{6, -2}.inv();
        GaussRat p1{1, 0}, p2{1, 0}, p3{1, 0}, p4g{1, 0};
        for (long j = 1; j <= v - 1; ++j) {
            p1 = p1 * w1;
            p2 = p2 * w2;
            p3 = p3 * w3;
            p4g = p4g * w4;
            Rat c = table.a(j) / j;
            S = S + (p1 - p2 - p3 + p4g) * c;
        }
    }
    if (S.re != 0) throw integrity_error("assemble_form: pole sum not purely imaginary");
    Rat pole_real = -S.im;  // Re(i*S)

    f.a = Rat(-sign) * (ip_x5 + pole_real);  // (-1)^{n+1} (...)
    return f;
}

LinearForm linear_form(long n, const FormOptions& opts) {
    return assemble_form(IntegrandParams::classic(n), opts);
}

ScaledForm scale_classic(const LinearForm& f) {
    const long n = f.n;
    SavingData sd = prime_set_P(n);
    ScaledForm s;
    s.n = n;
    s.scale_log2 = -(5 * n / 2) + 2;
    s.L = sd.L;
    Rat sa = mul_pow2(f.a * Rat(sd.L), s.scale_log2);
    Rat sb = mul_pow2(f.b * Rat(sd.L), s.scale_log2);
    if (!is_integer(sa) || !is_integer(sb))
        throw integrity_error("scaled_form: non-integral at n=" + std::to_string(n) +
                              " (denominator " + sa.get_den().get_str() + "/" +
                              sb.get_den().get_str() + ")");
    s.a_int = sa.get_num();
    s.b_int = sb.get_num();
    mpz_gcd(s.F.get_mpz_t(), s.a_int.get_mpz_t(), s.b_int.get_mpz_t());
    return s;
}

ScaledForm scaled_form(long n) { return scale_classic(linear_form(n)); }

static Certificate make_cert(const std::string& lemma, long n) {
    Certificate c;
    c.lemma = lemma;
    c.n = n;
    c.pass = true;
    return c;
}

static void fail(Certificate& c, const std::string& what) {
    if (c.pass) c.first_counterexample = what;
    c.pass = false;
}

Certificate verify_lemma(int lemma_id, long n) {
    IntegrandParams params = IntegrandParams::classic(n);
    switch (lemma_id) {
        case 1: {
            // 2^{-floor((5n+3j)/2)+1} 5^{-j} A_j in Z for j = 0..3n
            Certificate c = make_cert("lemma1", n);
            LaurentTable t = laurent_coeffs(params, 0, 3 * n);
            for (long j = 0; j <= 3 * n; ++j) {
                Rat x = t.a(j) / Rat(pow_int(5, static_cast<unsigned long>(j)));
                x = mul_pow2(x, -((5 * n + 3 * j) / 2) + 1);
                ++c.checked;
                if (!is_integer(x)) fail(c, "j=" + std::to_string(j));
            }
            return c;
        }
        case 2: {
            // p in P_n, p | j, j in {-4n+1..3n}  =>  p | 10^{-j} A_j
            Certificate c = make_cert("lemma2", n);
            SavingData sd = prime_set_P(n);
            LaurentTable t = laurent_coeffs(params, std::max(params.j_min(), -4 * n + 1), 3 * n);
            for (long p : sd.primes_P) {
                for (long j = -4 * n + 1; j <= 3 * n; ++j) {
                    if (j % p != 0) continue;
                    Rat x = t.a(j) * Rat(pow10(static_cast<unsigned long>(-std::min(j, 0L))),
                                         pow10(static_cast<unsigned long>(std::max(j, 0L))));
                    ++c.checked;
                    if (!is_integer(x) || Int(x.get_num()) % p != 0)
                        fail(c, "p=" + std::to_string(p) + " j=" + std::to_string(j));
                }
            }
            return c;
        }
        case 3: {
            // L_n 10^{-j} A_j / j in Z for j in {-4n..3n}\{0}; Phi | A_0
            Certificate c = make_cert("lemma3", n);
            SavingData sd = prime_set_P(n);
            LaurentTable t = laurent_coeffs(params, -4 * n, 3 * n);
            for (long j = -4 * n; j <= 3 * n; ++j) {
                if (j == 0) continue;
                Rat x = t.a(j) * Rat(pow10(static_cast<unsigned long>(-std::min(j, 0L))),
                                     pow10(static_cast<unsigned long>(std::max(j, 0L))));
                x = x * Rat(sd.L) / j;
                ++c.checked;
                if (!is_integer(x)) fail(c, "j=" + std::to_string(j));
            }
            Rat x0 = t.a(0) / Rat(sd.phi);
            ++c.checked;
            if (!is_integer(x0)) fail(c, "j=0 (Phi | A_0)");
            return c;
        }
        case 4: {
            // 2^{-floor(5n/2)+ceil(3k/2)+2} B_k in Z[i]
            Certificate c = make_cert("lemma4", n);
            LaurentTable t = laurent_coeffs(params);
            QPoly p = polypart_x5(params, t);
            std::vector<GaussInt> Bk = polypart_gauss(params, p, t);
            for (size_t k = 0; k < Bk.size(); ++k) {
                long e = -(5 * n / 2) + (3 * static_cast<long>(k) + 1) / 2 + 2;
                Rat re = mul_pow2(Rat(Bk[k].re), e), im = mul_pow2(Rat(Bk[k].im), e);
                ++c.checked;
                if (!is_integer(re) || !is_integer(im)) fail(c, "k=" + std::to_string(k));
            }
            return c;
        }
        default:
            throw std::invalid_argument("verify_lemma: lemma_id in {1,2,3,4}");
    }
}

Certificate verify_prop1(long n) {
    Certificate c = make_cert("prop1", n);
    try {
        ScaledForm s = scaled_form(n);
        c.checked = 2;
        (void)s;
    } catch (const integrity_error& e) {
        fail(c, e.what());
    }
    return c;
}

DeltaResult delta_empirical(const Rat& a, const Rat& b) {
    DeltaResult r;
    if (b == 0) return r;
    Int m;
    mpz_lcm(m.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rat ra = a * Rat(m), rb = b * Rat(m);
    Int A = ra.get_num(), B = rb.get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    A /= g;
    B /= g;
    Int q = abs(B);
    if (q <= 1) return r;  // undefined
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(
        mpz_sizeinbase(A.get_mpz_t(), 2) + mpz_sizeinbase(q.get_mpz_t(), 2) + 1024);
    Real eps = abs(Real(A, prec) + Real(B, prec) * Real::pi(prec));
    r.defined = true;
    r.delta = (-log(eps) / log(Real(q, prec))).to_double();
    r.mu_estimate = 1.0 + 1.0 / r.delta;
    return r;
}

DeltaResult delta_scaled(const ScaledForm& f) {
    DeltaResult r;
    Int q = abs(f.b_int);
    if (q <= 1) return r;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(
        mpz_sizeinbase(f.a_int.get_mpz_t(), 2) + mpz_sizeinbase(q.get_mpz_t(), 2) + 1024);
    Real eps = abs(Real(f.a_int, prec) + Real(f.b_int, prec) * Real::pi(prec));
    r.defined = true;
    r.delta = (-log(eps) / log(Real(q, prec))).to_double();
    r.mu_estimate = 1.0 + 1.0 / r.delta;
    return r;
}

}  // namespace pim
