#include "pim/construction.hpp"

#include <stdexcept>
#include <string>

namespace pim {

IntegrandParams IntegrandParams::classic(long n) {
    if (n < 0) throw std::invalid_argument("classic: n >= 0");
    IntegrandParams p;
    p.s = 2 * n;
    p.v = 3 * n + 1;
    p.label = FamilyLabel{0, 0, n, true};
    return p;
}

IntegrandParams IntegrandParams::family(long A, long B, long n) {
    if (A < 1 || B < 1 || n < 0) throw std::invalid_argument("family: A,B >= 1, n >= 0");
    IntegrandParams p;
    p.s = 2 * A * n;
    p.v = 2 * B * n + 1;
    p.label = FamilyLabel{A, B, n, false};
    return p;
}

QPoly integrand(const IntegrandParams& params) {
    QPoly quart({Rat(25), Rat(0), Rat(6), Rat(0), Rat(1)});
    QPoly num = pow(quart, static_cast<unsigned long>(params.s));
    std::vector<Rat> shifted(static_cast<size_t>(params.s) + num.c.size(), Rat(0));
    for (size_t i = 0; i < num.c.size(); ++i)
        shifted[i + static_cast<size_t>(params.s)] = num.c[i] * 5;
    return QPoly(std::move(shifted));
}

std::vector<Int> int_poly_mul_ref(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

namespace {

// signed coefficients are fine: the sum telescopes exactly
Int kron_pack(const std::vector<Int>& p, size_t lo, size_t hi, mp_bitcnt_t slot) {
    if (hi - lo == 1) return p[lo];
    size_t mid = (lo + hi) / 2;
    Int top = kron_pack(p, mid, hi, slot);
    mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), slot * (mid - lo));
    return kron_pack(p, lo, mid, slot) + top;
}

// balanced-digit unpack of z >= 0 into count coefficients
std::vector<Int> kron_unpack(const Int& z, mp_bitcnt_t slot, size_t count) {
    size_t nwords = mpz_sizeinbase(z.get_mpz_t(), 2) / 64 + 2;
    std::vector<uint64_t> w(nwords, 0);
    size_t exported = 0;
    if (z != 0) mpz_export(w.data(), &exported, -1, 8, 0, 0, z.get_mpz_t());

    std::vector<Int> r(count);
    Int digit, half = Int(1) << (slot - 1), full = Int(1) << slot;
    int carry = 0;
    for (size_t i = 0; i < count; ++i) {
        size_t pos = i * slot;
        size_t w0 = pos / 64, off = pos % 64;
        size_t span = std::min((slot + off) / 64 + 1, nwords - std::min(w0, nwords));
        if (w0 >= nwords || span == 0)
            digit = 0;
        else {
            mpz_import(digit.get_mpz_t(), span, -1, 8, 0, 0, w.data() + w0);
            mpz_fdiv_q_2exp(digit.get_mpz_t(), digit.get_mpz_t(), off);
            mpz_fdiv_r_2exp(digit.get_mpz_t(), digit.get_mpz_t(), slot);
        }
        digit += carry;
        if (digit >= half) {
            digit -= full;
            carry = 1;
        } else {
            carry = 0;
        }
        r[i] = digit;
    }
    return r;
}

}  // namespace

std::vector<Int> int_poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    size_t abits = 1, bbits = 1;
    for (const auto& x : a) abits = std::max(abits, mpz_sizeinbase(x.get_mpz_t(), 2));
    for (const auto& x : b) bbits = std::max(bbits, mpz_sizeinbase(x.get_mpz_t(), 2));
    size_t lg = 0;
    while ((1ull << lg) < std::min(a.size(), b.size())) ++lg;
    // every product coefficient plus the unpack carry fits in a signed slot
    const mp_bitcnt_t slot = static_cast<mp_bitcnt_t>(abits + bbits + lg + 3);

    Int z = kron_pack(a, 0, a.size(), slot) * kron_pack(b, 0, b.size(), slot);
    const size_t count = a.size() + b.size() - 1;
    if (z >= 0) return kron_unpack(z, slot, count);
    // a negative leading coefficient makes the packed product negative;
    // balanced digits of -z are exactly the negated coefficients
    std::vector<Int> r = kron_unpack(-z, slot, count);
    for (auto& c : r) c = -c;
    return r;
}

static std::vector<Int> int_poly_pow(std::vector<Int> base, unsigned long e) {
    std::vector<Int> r{1};
    while (e) {
        if (e & 1) r = int_poly_mul(r, base);
        e >>= 1;
        if (e) base = int_poly_mul(base, base);
    }
    return r;
}

// Integer coefficients of the numerator of R in t = x + 5:
// 5 (t-5)^s Q(t)^s with Q(t) = (t^2-12t+40)(t^2-8t+20), the shift of
// x^4 + 6x^2 + 25 = (x^2-2x+5)(x^2+2x+5).
static std::vector<Int> numerator_shifted(long s) {
    std::vector<Int> Q{800, -560, 156, -20, 1};
    std::vector<Int> Qs = int_poly_pow(std::move(Q), static_cast<unsigned long>(s));
    // 5 (t-5)^s expanded binomially
    std::vector<Int> F(static_cast<size_t>(s) + 1);
    Int c = pow_int(-5, static_cast<unsigned long>(s)) * 5;
    for (long i = 0; i <= s; ++i) {
        F[static_cast<size_t>(i)] = c * binom(static_cast<unsigned long>(s),
                                              static_cast<unsigned long>(i));
        c /= -5;
    }
    return int_poly_mul(Qs, F);
}

LaurentTable::LaurentTable(IntegrandParams params, long j_lo, long j_hi, std::vector<Int> c)
    : params_(params), j_lo_(j_lo), j_hi_(j_hi), c_(std::move(c)), k0_(params.v - 1 - j_hi) {}

const Int& LaurentTable::raw(long j) const {
    if (j < j_lo_ || j > j_hi_)
        throw std::out_of_range("LaurentTable: j=" + std::to_string(j) + " outside window");
    return c_[static_cast<size_t>(params_.v - 1 - j - k0_)];
}

Rat LaurentTable::a(long j) const {
    Rat r(raw(j), pow10(static_cast<unsigned long>(raw_pow10(j))));
    r.canonicalize();
    return r;
}

LaurentTable laurent_coeffs(const IntegrandParams& params, long j_lo, long j_hi,
                            bool use_parallel) {
    const long v = params.v;
    if (j_hi > v - 1 || j_lo < params.j_min() - 1 || j_lo > j_hi)
        throw std::out_of_range("laurent_coeffs: window out of range");
    const long k_lo = v - 1 - j_hi;
    const long k_hi = v - 1 - j_lo;

    std::vector<Int> numer = numerator_shifted(params.s);
    // nm[m] = numer[m] * 10^m, only m <= k_hi contribute
    const long m_max = std::min<long>(static_cast<long>(numer.size()) - 1, k_hi);
    std::vector<Int> nm(static_cast<size_t>(m_max) + 1);
    {
        Int p10 = 1;
        for (long m = 0; m <= m_max; ++m) {
            nm[static_cast<size_t>(m)] = numer[static_cast<size_t>(m)] * p10;
            p10 *= 10;
        }
    }
    // binv[d] = binom(v-1+d, d)
    std::vector<Int> binv(static_cast<size_t>(k_hi) + 1);
    binv[0] = 1;
    for (long d = 1; d <= k_hi; ++d)
        binv[static_cast<size_t>(d)] = binv[static_cast<size_t>(d - 1)] * (v - 1 + d) / d;

    std::vector<Int> c(static_cast<size_t>(k_hi - k_lo) + 1);
#pragma omp parallel for schedule(dynamic, 8) if (use_parallel)
    for (long k = k_lo; k <= k_hi; ++k) {
        Int acc = 0;
        const long top = std::min(m_max, k);
        for (long m = 0; m <= top; ++m) {
            if (nm[static_cast<size_t>(m)] != 0)
                acc += nm[static_cast<size_t>(m)] * binv[static_cast<size_t>(k - m)];
        }
        c[static_cast<size_t>(k - k_lo)] = std::move(acc);
    }
    // ascending k means descending j; table wants c[i] for j = j_hi - i which
    // is exactly ascending k
    return LaurentTable(params, j_lo, j_hi, std::move(c));
}

Rat aj_multiindex_oracle(long n, long j) {
    if (n > 6) throw std::invalid_argument("aj_multiindex_oracle: n <= 6 only");
    if (j > 3 * n) throw std::invalid_argument("aj_multiindex_oracle: j <= 3n required");
    const long two_n = 2 * n;
    // power tables
    auto pow_table = [](const GaussRat& z, long top) {
        std::vector<GaussRat> t(static_cast<size_t>(top) + 1);
        t[0] = GaussRat{1, 0};
        for (long i = 1; i <= top; ++i) t[static_cast<size_t>(i)] = t[static_cast<size_t>(i - 1)] * z;
        return t;
    };
    auto p2pi = pow_table(GaussRat{2, 1}, 4 * n);                 // (2+i)^m
    auto p2mi = pow_table(GaussRat{2, -1}, 4 * n);                // (2-i)^m
    auto p1miinv = pow_table(GaussRat{1, -1}.inv(), 3 * n - j);   // (1-i)^{-m}
    auto p1piinv = pow_table(GaussRat{1, 1}.inv(), 3 * n - j);    // (1+i)^{-m}
    const Rat five_j = j >= 0 ? Rat(pow_int(5, static_cast<unsigned long>(j)))
                              : Rat(1, pow_int(5, static_cast<unsigned long>(-j)));
    GaussRat total{0, 0};
    const long smax = 3 * n - j;  // m1+..+m5 <= smax, remainder goes to m0
    for (long m1 = 0; m1 <= std::min(two_n, smax); ++m1) {
        Int b1 = binom(static_cast<unsigned long>(two_n), static_cast<unsigned long>(m1));
        for (long m2 = 0; m1 + m2 <= smax && m2 <= two_n; ++m2) {
            Int b2 = b1 * binom(static_cast<unsigned long>(two_n), static_cast<unsigned long>(m2));
            for (long m3 = 0; m1 + m2 + m3 <= smax && m3 <= two_n; ++m3) {
                Int b3 = b2 * binom(static_cast<unsigned long>(two_n), static_cast<unsigned long>(m3));
                for (long m4 = 0; m1 + m2 + m3 + m4 <= smax && m4 <= two_n; ++m4) {
                    Int b4 = b3 * binom(static_cast<unsigned long>(two_n), static_cast<unsigned long>(m4));
                    for (long m5 = 0; m1 + m2 + m3 + m4 + m5 <= smax && m5 <= two_n; ++m5) {
                        long m0 = smax - (m1 + m2 + m3 + m4 + m5);
                        Int T = b4 *
                                binom(static_cast<unsigned long>(two_n), static_cast<unsigned long>(m5)) *
                                binom(static_cast<unsigned long>(3 * n + m0), static_cast<unsigned long>(m0));
                        if ((m1 + m2 + m3 + m4 + m5) & 1) T = -T;
                        Rat coef = mul_pow2(Rat(T) * five_j, 4 * n - 1 + j + m1);
                        GaussRat g = p2pi[static_cast<size_t>(m2 + m5)] *
                                     p2mi[static_cast<size_t>(m3 + m4)] *
                                     p1miinv[static_cast<size_t>(m4)] *
                                     p1piinv[static_cast<size_t>(m5)];
                        total = total + g * coef;
                    }
                }
            }
        }
    }
    if (!total.is_real())
        throw integrity_error("aj_multiindex_oracle: nonreal sum at n=" + std::to_string(n) +
                              " j=" + std::to_string(j));
    return total.re;
}

Int z_sum(long n, long m, long j) {
    Int z = 0;
    const long n0_max = std::min(2 * n + 2 * m, 3 * n - j);
    Int pw = 1;  // (-2)^{n0}
    for (long n0 = 0; n0 <= n0_max; ++n0) {
        z += pw * binom(static_cast<unsigned long>(2 * n + 2 * m), static_cast<unsigned long>(n0)) *
             binom(static_cast<unsigned long>(6 * n - j - n0), static_cast<unsigned long>(3 * n));
        pw *= -2;
    }
    return z;
}

Rat aj_hypergeometric_oracle(long n, long j) {
    if (n > 6) throw std::invalid_argument("aj_hypergeometric_oracle: n <= 6 only");
    if (j > 3 * n) throw std::invalid_argument("aj_hypergeometric_oracle: j <= 3n required");
    const long two_n = 2 * n;
    auto pow_table = [](const GaussInt& z, long top) {
        std::vector<GaussInt> t(static_cast<size_t>(top) + 1);
        t[0] = GaussInt{1, 0};
        for (long i = 1; i <= top; ++i) t[static_cast<size_t>(i)] = t[static_cast<size_t>(i - 1)] * z;
        return t;
    };
    auto pm = pow_table(GaussInt{3, -4}, two_n);  // (3-4i)^e
    auto pp = pow_table(GaussInt{3, 4}, two_n);   // (3+4i)^e
    GaussInt acc{0, 0};
    for (long n1 = 0; n1 <= two_n; ++n1) {
        for (long n2 = 0; n2 <= two_n; ++n2) {
            Int f = pow_int(5, static_cast<unsigned long>(2 * n + 2 * n1 + 2 * n2 + 1)) *
                    binom(static_cast<unsigned long>(two_n), static_cast<unsigned long>(n1)) *
                    binom(static_cast<unsigned long>(two_n), static_cast<unsigned long>(n2)) *
                    z_sum(n, n1 + n2, j);
            GaussInt g = pm[static_cast<size_t>(two_n - n1)] * pp[static_cast<size_t>(two_n - n2)];
            acc = acc + GaussInt{g.re * f, g.im * f};
        }
    }
    if (acc.im != 0)
        throw integrity_error("aj_hypergeometric_oracle: nonreal sum at n=" + std::to_string(n) +
                              " j=" + std::to_string(j));
    Rat r(acc.re, pow10(static_cast<unsigned long>(6 * n - j + 1)));
    r.canonicalize();
    return r;
}

Int super_catalan(long N, long M) {
    Int num = factorial(2 * N) * factorial(2 * M);
    Int den = factorial(N) * factorial(N + M) * factorial(M);
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw integrity_error("super_catalan: not integral");
    return q;
}

Int super_catalan_vonszily(long N, long M) {
    Int acc = 0;
    for (long k = -std::min(N, M); k <= std::min(N, M); ++k) {
        Int t = binom(static_cast<unsigned long>(2 * N), static_cast<unsigned long>(N + k)) *
                binom(static_cast<unsigned long>(2 * M), static_cast<unsigned long>(M + k));
        acc += (k & 1) ? -t : t;
    }
    return acc;
}

QPoly polypart_x5(const IntegrandParams& params, const LaurentTable& table) {
    const long deg = params.poly_degree();
    if (deg < 0) return QPoly({}, Basis::XPlus5);
    const long v = params.v;
    const long K = deg + 2;  // one extra coefficient for the vanishing check
    if (table.j_lo() > -K || table.j_hi() < v - 1)
        throw std::out_of_range("polypart_x5: table does not cover the needed window");
    // G(t) = sum_{j=0}^{v-1} A_j (10-t)^{-(j+1)}, truncated to K terms, built by
    // Horner: G_j = (A_j + G_{j+1}) / (10 - t).  All in integers scaled by
    // powers of 10: g[k] = G[k] * 10^{2v+k}, so each Horner step is an exact
    // division by 10.
    std::vector<Int> g(static_cast<size_t>(K), Int(0));
    Int p10 = pow10(static_cast<unsigned long>(v));  // 10^{j+1} for j = v-1
    for (long j = v - 1; j >= 0; --j) {
        // c tracks 10 * h[k]; starts at a_j * 10^{2v} = raw(j) * 10^{j+1}
        Int c = table.raw(j) * p10;
        for (long k = 0; k < K; ++k) {
            c += g[static_cast<size_t>(k)];
            mpz_divexact_ui(g[static_cast<size_t>(k)].get_mpz_t(), c.get_mpz_t(), 10);
        }
        if (j > 0) mpz_divexact_ui(p10.get_mpz_t(), p10.get_mpz_t(), 10);
    }
    // p[k-1] = A_{-k} - G[k-1], common denominator 10^{2v-1+k}
    std::vector<Rat> p(static_cast<size_t>(deg) + 1);
    Int den = pow10(static_cast<unsigned long>(2 * v));
    for (long k = 1; k <= deg + 1; ++k) {
        Rat q(table.raw(-k) - g[static_cast<size_t>(k - 1)], den);
        q.canonicalize();
        p[static_cast<size_t>(k - 1)] = std::move(q);
        den *= 10;
    }
    if (table.raw(-(deg + 2)) != g[static_cast<size_t>(deg + 1)])
        throw integrity_error("polypart_x5: coefficient beyond degree bound does not vanish");
    return QPoly(std::move(p), Basis::XPlus5);
}

std::vector<GaussInt> polypart_gauss(const IntegrandParams& params, const QPoly& p_x5,
                                     const LaurentTable& table) {
    if (p_x5.basis != Basis::XPlus5) throw std::invalid_argument("polypart_gauss: (x+5) basis input");
    std::vector<GaussInt> out;
    if (p_x5.is_zero()) return out;
    // x+1+2i = (x+5) - (4-2i): synthetic division at beta = 4-2i in the (x+5) basis
    const GaussRat beta{4, -2};
    std::vector<GaussRat> cur(p_x5.c.size());
    for (size_t i = 0; i < p_x5.c.size(); ++i) cur[i] = GaussRat(p_x5.c[i], Rat(0));
    while (!cur.empty()) {
        GaussRat r{0, 0};
        std::vector<GaussRat> q(cur.size());
        for (size_t i = cur.size(); i-- > 0;) {
            r = r * beta + cur[i];
            q[i] = r;
        }
        // q[0] is the remainder, q[1..] the quotient
        if (!q[0].is_gauss_integer())
            throw integrity_error("polypart_gauss: B_k not in Z[i] at k=" +
                                  std::to_string(out.size()));
        out.push_back(GaussInt{Int(q[0].re.get_num()), Int(q[0].im.get_num())});
        cur.assign(q.begin() + 1, q.end());
    }
    // classic case: recompute the k < 2n prefix from the pole-side closed form
    if (params.label && params.label->classic) {
        const long n = params.label->n;
        const GaussRat inv_a = GaussRat{4, -2}.inv();  // 1/(4-2i)
        const GaussRat inv_b = GaussRat{6, 2}.inv();   // 1/(6+2i)
        for (long k = 0; k < 2 * n && k < static_cast<long>(out.size()); ++k) {
            GaussRat sum{0, 0};
            GaussRat pa = gpow(inv_a, k), pb = gpow(inv_b, k);
            for (long j = 0; j <= 3 * n; ++j) {
                pa = pa * inv_a;
                pb = pb * inv_b;
                Rat c = Rat(binom(static_cast<unsigned long>(j + k), static_cast<unsigned long>(k))) *
                        table.a(j);
                GaussRat term = ((k & 1) ? -pa : pa) + pb;
                sum = sum + term * c;
            }
            GaussRat expect = -sum;
            if (!(expect == GaussRat(out[static_cast<size_t>(k)])))
                throw integrity_error("polypart_gauss: closed-form mismatch at k=" +
                                      std::to_string(k));
        }
    }
    return out;
}

}  // namespace pim
