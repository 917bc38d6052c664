// Integrand R(x) = 5 x^s (x^4+6x^2+25)^s / ((5+x)^v (5-x)^v), its Laurent
// coefficients A_j at x = -5, and the polynomial part in two bases.
//
// The production A_j path is a truncated-series expansion in t = x+5 whose
// coefficients carry a shared power-of-10 denominator, so the hot loop is
// pure integer arithmetic.  Two slow independent formulas for A_j are kept
// as small-n oracles.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pim/gaussian.hpp"
#include "pim/poly.hpp"
#include "pim/rational.hpp"

namespace pim {

struct FamilyLabel {
    long A = 0, B = 0, n = 0;
    bool classic = false;  // classic(n): A=2n/s... tag only
};

struct IntegrandParams {
    long s = 0;  // common exponent of the five numerator factors
    long v = 1;  // exponent of (25 - x^2)
    std::optional<FamilyLabel> label;

    static IntegrandParams classic(long n);           // s = 2n, v = 3n+1
    static IntegrandParams family(long A, long B, long n);  // s = 2An, v = 2Bn+1

    long poly_degree() const { return 5 * s - 2 * v; }  // may be negative (no poly part)
    long j_min() const { long d = poly_degree(); return d >= 0 ? -(d + 2) : 0; }
    long j_max() const { return v - 1; }
    bool operator==(const IntegrandParams& o) const { return s == o.s && v == o.v; }
};

// Exact numerator polynomial 5 x^s (x^4+6x^2+25)^s in the monomial basis.
QPoly integrand(const IntegrandParams& params);

// Integer polynomial product via Kronecker substitution (one GMP integer
// multiply), and the schoolbook reference it is tested against.
std::vector<Int> int_poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> int_poly_mul_ref(const std::vector<Int>& a, const std::vector<Int>& b);

// Laurent table: A(j) = coefficient of (x+5)^{-j-1} in the expansion of R at
// x = -5, over a j-window.  Stored as integers with shared powers of 10.
class LaurentTable {
public:
    // c[i] = A_{j_hi - i} * 10^{2v-1-(j_hi-i)}, i.e. ascending in k = v-1-j.
    LaurentTable(IntegrandParams params, long j_lo, long j_hi, std::vector<Int> c);

    const IntegrandParams& params() const { return params_; }
    long j_lo() const { return j_lo_; }
    long j_hi() const { return j_hi_; }

    Rat a(long j) const;                 // A_j as a normalized rational
    const Int& raw(long j) const;        // A_j * 10^(2v-1-j)
    long raw_pow10(long j) const { return 2 * params_.v - 1 - j; }

private:
    IntegrandParams params_;
    long j_lo_, j_hi_;
    std::vector<Int> c_;  // c_[k] = A_{v-1-k} * 10^{v+k}, k = v-1-j
    long k0_;
};

// Series-method table over [j_lo, j_hi]; this is the production path.
// parallel = false runs the serial reference kernel.
LaurentTable laurent_coeffs(const IntegrandParams& params, long j_lo, long j_hi,
                            bool parallel = true);
inline LaurentTable laurent_coeffs(const IntegrandParams& params, bool parallel = true) {
    return laurent_coeffs(params, params.j_min(), params.j_max(), parallel);
}

// Slow oracle: Leibniz multi-index sum over the set M_j (classic case only,
// exponential in n; guarded to n <= 6).
Rat aj_multiindex_oracle(long n, long j);

// Slow oracle: the Z-sum / hypergeometric representation (classic case only).
Rat aj_hypergeometric_oracle(long n, long j);

// Z(n, m, j) = sum_{n0} (-2)^{n0} binom(2n+2m, n0) binom(6n-j-n0, 3n)
Int z_sum(long n, long m, long j);

// (2N)! (2M)! / (N! (N+M)! M!)
Int super_catalan(long N, long M);
// von Szily alternating-sum route to the same number
Int super_catalan_vonszily(long N, long M);

// Polynomial part of R in the (x+5) basis; coefficient of (x+5)^{k-1} is
// A_{-k} - sum_j binom(j+k-1, j) A_j / 10^{j+k}.  Checks that coefficients
// past the degree bound vanish.
QPoly polypart_x5(const IntegrandParams& params, const LaurentTable& table);

// Rewrite P as sum B_k (x+1+2i)^k with B_k in Z[i], by synthetic division
// over Gaussian rationals.  For classic params the k < 2n prefix is
// recomputed from the pole-side closed form and compared.
std::vector<GaussInt> polypart_gauss(const IntegrandParams& params, const QPoly& p_x5,
                                     const LaurentTable& table);

}  // namespace pim
