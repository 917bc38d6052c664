// High-precision numerics: certified root finding, saddle-point data, growth
// rates, the measure bounds, and contour quadrature for validation.
#pragma once

#include <utility>
#include <vector>

#include "pim/bigfloat.hpp"
#include "pim/construction.hpp"
#include "pim/rational.hpp"

namespace pim {

// 108 N^3 - 2359989 N^2 + 138304 N - 2048, ascending; matches
// indicial_polynomial of the guessed classic recurrence (asserted in tests).
extern const std::vector<Int> kIndicialClassic;

// 2 y^3 - 125 y^2 - 500 y - 625, the numerator of g'(y)/g(y)
extern const std::vector<Int> kSaddleCubic;

// All complex roots, residual-certified: |p(z)| < 10^{-(digits-8)} * max|c_i|.
// Requires a squarefree polynomial.  Conjugate pairs are exact for real input.
std::vector<Complex> poly_roots(const std::vector<Rat>& coeffs, long digits);

// g(y) = y (y^2+6y+25)^2 / (y-25)^3
Complex g_saddle(const Complex& y, long digits);

struct AsymptoticData {
    std::vector<Complex> N_roots;   // indicial roots, ascending |.|
    std::vector<Complex> y_roots;   // saddle cubic roots, same order convention
    std::vector<Complex> g_values;  // g(y_j), matched against N_roots
    Real phi_limit;
    Real rate_I, rate_b;
    Real mu_bound, mu_crude;
};

AsymptoticData asymptotic_data(long digits);

// rate_I = log|N_1| - (5/2) log 2 + 4 - phi_limit, rate_b likewise with log N_3
std::pair<Real, Real> rates(long digits);

// mu_bound = 1 + rate_b / (-rate_I);
// mu_crude = 1 + (rate_b + phi) / (-(rate_I + phi)), i.e. no Phi_n saving
std::pair<Real, Real> measure_bounds(long digits);

// i (-1)^{n+1} integral of R over the straight segment [-1-2i, -1+2i] by
// doubling tanh-sinh quadrature; error estimate kept below 10^{-(digits-10)}.
Complex contour_integral(const IntegrandParams& params, long digits);

}  // namespace pim
