// Exact scalar layer: arbitrary-precision integers and rationals on top of GMP,
// plus the p-adic valuation helpers used by the divisibility certificates.
#pragma once

#include <gmpxx.h>
#include <limits>
#include <stdexcept>
#include <string>

namespace pim {

using Int = mpz_class;
using Rat = mpq_class;

class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow10(unsigned long e) { return pow_int(10, e); }

// q * 2^e for possibly negative e
inline Rat mul_pow2(const Rat& q, long e) {
    Rat r = q;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

inline Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// binom(n, k) for arbitrary-precision n
inline Int binom(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

constexpr long kPadicOrderOfZero = std::numeric_limits<long>::max();

// Exponent of the prime p in x.  ord_p(0) is the +infinity sentinel.
long padic_order(const Int& x, const Int& p);
long padic_order(const Rat& x, const Int& p);

}  // namespace pim
