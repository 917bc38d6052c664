#include "pim/numtheory.hpp"

#include <cmath>
#include <stdexcept>

namespace pim {

std::vector<long> primes_up_to(long m) {
    std::vector<long> out;
    if (m < 2) return out;
    std::vector<bool> comp(static_cast<size_t>(m) + 1, false);
    for (long p = 2; p <= m; ++p) {
        if (comp[static_cast<size_t>(p)]) continue;
        out.push_back(p);
        for (long q = p * p; q >= 0 && q <= m; q += p) comp[static_cast<size_t>(q)] = true;
    }
    return out;
}

Int lcm_upto(long m) {
    Int l = 1;
    for (long k = 2; k <= m; ++k) {
        Int kk(k);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), kk.get_mpz_t());
    }
    return l;
}

SavingData prime_set_P(long n) {
    if (n < 0) throw std::invalid_argument("prime_set_P: n >= 0 required");
    SavingData sd;
    sd.n = n;
    sd.phi = 1;
    // membership in exact integer arithmetic: p > 5, p^2 > 3n,
    // 2 (n mod p) >= p and 3 (n mod p) < 2p
    for (long p : primes_up_to(2 * n)) {
        if (p <= 5 || p * p <= 3 * n) continue;
        long r = n % p;
        if (2 * r >= p && 3 * r < 2 * p) {
            sd.primes_P.push_back(p);
            sd.phi *= p;
        }
    }
    sd.lcm4n = lcm_upto(4 * n);
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), sd.lcm4n.get_mpz_t(), sd.phi.get_mpz_t());
    if (rem != 0)
        throw integrity_error("prime_set_P: Phi_n does not divide lcm(1..4n) at n=" +
                              std::to_string(n));
    sd.L = q;
    return sd;
}

PhiGrowth phi_growth(long n_max, long step) {
    PhiGrowth g;
    // shared sieve, then an incremental scan per sample index
    std::vector<long> primes = primes_up_to(2 * n_max);
    for (long n = 1; n <= n_max; n += step) {
        double lg = 0.0;
        for (long p : primes) {
            if (p > 2 * n) break;
            if (p <= 5 || p * p <= 3 * n) continue;
            long r = n % p;
            if (2 * r >= p && 3 * r < 2 * p) lg += std::log(static_cast<double>(p));
        }
        g.samples.emplace_back(n, lg / static_cast<double>(n));
    }
    g.limit = phi_limit(32).to_double();
    return g;
}

Real phi_limit(long digits) {
    mpfr_prec_t prec = bits_for_digits(digits);
    Real pi = Real::pi(prec);
    Real s3 = sqrt(Real(3L, prec));
    // pi/(2 sqrt 3) - log(3 sqrt 3 / 4)
    return pi / (Real(2L, prec) * s3) - log(Real(3L, prec) * s3 / Real(4L, prec));
}

Real phi_limit_digamma(long digits) {
    mpfr_prec_t prec = bits_for_digits(digits);
    return digamma(Real(Rat(2, 3), prec)) - digamma(Real(Rat(1, 2), prec));
}

}  // namespace pim
